#ifndef ADM_PENDULUM_HPP
#define ADM_PENDULUM_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "adm/adomian.hpp"
#include "adm/rational.hpp"
#include "adm/series.hpp"

namespace adm {

/// Initial-value problem u'' + b sin(u) = 0, u(0) = a, u'(0) = 0, solved as
/// a truncated power series by decomposition: u0 = a constant and
/// u_{m+1} = -L^{-1}[b A_m], L^{-1} being the double integral from 0.
struct PendulumProblem {
  double initial_angle = 0.0;      // a, radians
  double geometric_constant = 1.0; // b > 0
  int components = 10;             // M, number of A_m consumed (u_1..u_M produced)
  int order = 20;                  // N, series degree bound; N >= 2M
};

void validate(const PendulumProblem& p);

/// F^(order) at the fixed expansion point u0 = a. Order 0 is F(a) itself.
/// Keeping only derivative values abstract lets the same solver run in exact
/// rational arithmetic whenever every sin^(k)(a) is rational.
template <typename T>
using DerivativeValues = std::function<T(unsigned order)>;

/// sin^(k) at a right angle: the cycle 1, 0, -1, 0. The one spot where the
/// pendulum series is exactly rational (up to the constant a itself).
Rational sin_derivative_at_right_angle(unsigned order);

/// sin^(k)(a) in floating point for an arbitrary angle.
DerivativeValues<double> sin_derivatives_at(double angle);

/// The solution components u_1..u_M (index 0 holds u_1), each a series of
/// the given truncation order. Component u_m has no terms below degree 2m.
template <typename T>
std::vector<TruncatedSeries<T>> pendulum_components(const DerivativeValues<T>& derivative_at_a,
                                                    const T& geometric_constant,
                                                    int components, int order);

/// sum_{m=1}^{M} u_m: the deviation of the solution from the constant a.
/// For a right angle this is the exact-rational face of the solver.
template <typename T>
TruncatedSeries<T> pendulum_deviation(const DerivativeValues<T>& derivative_at_a,
                                      const T& geometric_constant,
                                      int components, int order) {
  TruncatedSeries<T> sum(order);
  for (const auto& component :
       pendulum_components<T>(derivative_at_a, geometric_constant, components, order)) {
    sum += component;
  }
  return sum;
}

/// Full floating-point solution series sum_{m=0}^{M} u_m (constant term a).
/// The oracle is consulted only at the expansion point a.
TruncatedSeries<double> pendulum_solve(const PendulumProblem& p, const DerivativeOracle<double>& f);

struct PendulumState {
  double angle = 0.0;
  double velocity = 0.0;
};

/// One classical fourth-order step of u' = v, v' = -b sin(u).
PendulumState rk4_step(const PendulumState& state, double geometric_constant, double dt);

/// u(t_end) from `steps` equal fourth-order steps; the independent oracle
/// the series solution is cross-checked against.
double reference_integrate(const PendulumProblem& p, double t_end, int steps);

/// Final state of the same integration, for energy bookkeeping.
PendulumState reference_state(const PendulumProblem& p, double t_end, int steps);

extern template std::vector<TruncatedSeries<double>> pendulum_components<double>(
    const DerivativeValues<double>&, const double&, int, int);
extern template std::vector<TruncatedSeries<Rational>> pendulum_components<Rational>(
    const DerivativeValues<Rational>&, const Rational&, int, int);

}  // namespace adm

#endif  // ADM_PENDULUM_HPP
