#ifndef ADM_TESTS_ADOMIAN_REFERENCE_HPP
#define ADM_TESTS_ADOMIAN_REFERENCE_HPP

#include <utility>
#include <vector>

namespace adm::testing {

/// One monomial of a published A_m listing: the coefficient is always
/// 1/denominator, exponents are (index, power) pairs in ascending index.
struct ReferenceTerm {
  int k = 0;
  long long denominator = 1;
  std::vector<std::pair<int, int>> exponents;
};

/// The classical tabulated expansions A_0..A_10, transcribed term by term
/// from the literature listings. m = 0 yields an empty list (A_0 = F(u0)
/// carries no reduced polynomial).
const std::vector<ReferenceTerm>& reference_adomian_terms(int m);

/// t^(2n) coefficient of the pendulum series solution of
/// u'' + b sin(u) = 0, u(0) = a, u'(0) = 0, for 2n in 2..20, evaluated in
/// floating point from the published closed forms in sin(j a).
double reference_pendulum_coefficient(int degree, double angle, double geometric_constant);

}  // namespace adm::testing

#endif  // ADM_TESTS_ADOMIAN_REFERENCE_HPP
