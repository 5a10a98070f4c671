#ifndef ADM_ADOMIAN_HPP
#define ADM_ADOMIAN_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adm/rational.hpp"
#include "adm/reduced.hpp"
#include "adm/series.hpp"

namespace adm {

/// The Adomian polynomial A_m as the association k -> Z_{m,k}:
///
///   A_m = sum_{k=1}^{m} Z_{m,k}(u_1, ..., u_{m-k+1}) F^(k)(u0),
///
/// with A_0 = F(u0) held as the distinguished empty-parts case.
class AdomianPolynomial {
 public:
  AdomianPolynomial(int m, std::vector<ReducedPolynomial> parts);

  int m() const { return m_; }

  /// Z_{m,k} for k = 1..m, indexed by k-1. Empty when m = 0.
  const std::vector<ReducedPolynomial>& parts() const { return parts_; }

  friend bool operator==(const AdomianPolynomial&, const AdomianPolynomial&) = default;

 private:
  int m_;
  std::vector<ReducedPolynomial> parts_;
};

/// Assembles A_m from the reduced polynomials. m >= 0.
AdomianPolynomial adomian_polynomial(int m);

/// Total monomials across all parts of A_m: the number of unrestricted
/// partitions p(m) for m >= 1, and 1 for m = 0.
std::uint64_t monomial_count(int m);

enum class RenderFormat { text, json };

/// Deterministic rendering: parts in increasing k, canonical monomial order,
/// exact fraction coefficients, derivative symbols as F^(k)(u0). The JSON
/// form nests the reduced-polynomial schema under "m" and "parts".
std::string render(const AdomianPolynomial& a, RenderFormat format);

/// Numeric inputs for evaluating A_m. derivative_values[i] holds F^(i)(u0)
/// with index 0 = F(u0) itself, so A_0 is evaluable too; u_values[i] holds
/// u_{i+1}. Evaluating A_m needs m u-values and derivative orders 0..m.
template <typename T>
struct EvaluationContext {
  std::vector<T> u_values;
  std::vector<T> derivative_values;
};

/// Substitutes the context into every part of A_m. Exact when T is Rational.
template <typename T>
T evaluate(const AdomianPolynomial& a, const EvaluationContext<T>& ctx) {
  const int m = a.m();
  if (static_cast<int>(ctx.u_values.size()) < m ||
      static_cast<int>(ctx.derivative_values.size()) < m + 1) {
    throw std::invalid_argument("evaluation context too short for A_" + std::to_string(m));
  }
  if (m == 0) return ctx.derivative_values[0];
  T total(0);
  for (const ReducedPolynomial& z : a.parts()) {
    T part_value(0);
    for (const Monomial& term : z.terms()) {
      T product = from_rational<T>(term.coefficient);
      for (const auto& entry : term.exponents.entries()) {
        const T& base = ctx.u_values[static_cast<std::size_t>(entry.index) - 1];
        for (int e = 0; e < entry.multiplicity; ++e) product *= base;
      }
      part_value += product;
    }
    total += part_value * ctx.derivative_values[static_cast<std::size_t>(z.k())];
  }
  return total;
}

/// Supplies F^(order)(point); order 0 is F itself.
template <typename T>
using DerivativeOracle = std::function<T(unsigned order, const T& point)>;

/// Compares the diophantine construction of A_m against the defining
/// expansion: for m = 0..max_order, pairs
///   (evaluate(A_m, ctx), [eps^m] F(u0 + sum_i u_i eps^i)),
/// where the right side is computed by brute-force truncated Taylor
/// composition, independent of the enumeration path.
template <typename T>
std::vector<std::pair<T, T>> generating_series_check(const DerivativeOracle<T>& oracle,
                                                     const T& u0,
                                                     const std::vector<T>& u_values,
                                                     int max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (static_cast<int>(u_values.size()) < max_order) {
    throw std::invalid_argument("need at least max_order u-values");
  }

  EvaluationContext<T> ctx;
  ctx.u_values.assign(u_values.begin(), u_values.begin() + max_order);
  for (int order = 0; order <= max_order; ++order) {
    ctx.derivative_values.push_back(oracle(static_cast<unsigned>(order), u0));
  }

  // F(u0 + g) = sum_k F^(k)(u0)/k! g^k with g = sum_{i>=1} u_i eps^i; g has
  // no constant term, so powers beyond max_order cannot reach degree <= max_order.
  TruncatedSeries<T> perturbation(max_order);
  for (int i = 1; i <= max_order; ++i) perturbation.set(i, u_values[static_cast<std::size_t>(i) - 1]);
  TruncatedSeries<T> composed = TruncatedSeries<T>::constant(ctx.derivative_values[0], max_order);
  TruncatedSeries<T> power = TruncatedSeries<T>::constant(T(1), max_order);
  for (int k = 1; k <= max_order; ++k) {
    power = power * perturbation;
    const T scale = ctx.derivative_values[static_cast<std::size_t>(k)] *
                    from_rational<T>(Rational(1, factorial(static_cast<unsigned>(k))));
    composed += power * scale;
  }

  std::vector<std::pair<T, T>> pairs;
  for (int m = 0; m <= max_order; ++m) {
    pairs.emplace_back(evaluate(adomian_polynomial(m), ctx), composed[m]);
  }
  return pairs;
}

}  // namespace adm

#endif  // ADM_ADOMIAN_HPP
