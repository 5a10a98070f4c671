#ifndef ADM_REDUCED_HPP
#define ADM_REDUCED_HPP

#include <string>
#include <vector>

#include "adm/diophantine.hpp"
#include "adm/rational.hpp"

namespace adm {

/// One summand of Z_{m,k}: coefficient times a product of u_i powers.
/// Built from an enumerated solution, the coefficient is 1 / prod(n_i!).
struct Monomial {
  Rational coefficient;
  MultiplicityVector exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The reduced polynomial Z_{m,k}: the coefficient of F^(k)(u0) in the m-th
/// Adomian polynomial, with terms held in canonical order.
class ReducedPolynomial {
 public:
  ReducedPolynomial(int m, int k, std::vector<Monomial> terms);

  int m() const { return m_; }
  int k() const { return k_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;

 private:
  int m_;
  int k_;
  std::vector<Monomial> terms_;
};

/// Builds Z_{m,k} by enumerating the reduced diophantine system.
/// Requires 1 <= k <= m.
ReducedPolynomial reduced_polynomial(int m, int k);

/// General-m expression for Z_{m,m-j}, j in 0..5, stored as data. Each term
/// carries u_1 to the power m-offset (dropped when negative), fixed exponents
/// on u_2..u_{j+1} and the constant factorial part of the denominator; the
/// remaining denominator factor is (m-offset)!.
struct ClosedFormTemplate {
  struct Term {
    int offset;                                        // u_1 exponent = m - offset
    std::vector<MultiplicityVector::Entry> fixed;      // exponents on u_2..u_{j+1}
    BigInt fixed_factorials;                           // prod of n_i! over the fixed part
  };

  int j = 0;
  std::vector<Term> terms;
};

/// The template for Z_{m,m-j}. Throws for j outside 0..5 (no general
/// expression is provided beyond j = 5).
const ClosedFormTemplate& closed_form(int j);

/// Substitutes a concrete m into the template, dropping terms whose u_1
/// exponent would be negative. Requires m >= j + 1; the result equals
/// reduced_polynomial(m, m - j).
ReducedPolynomial instantiate(const ClosedFormTemplate& tmpl, int m);

/// Canonical text: terms joined by " + ", each as [p/q*]u_i[^n] factors.
std::string to_text(const ReducedPolynomial& z);
std::string to_text(const Monomial& term);

}  // namespace adm

#endif  // ADM_REDUCED_HPP
