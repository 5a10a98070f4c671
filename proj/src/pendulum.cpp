#include "adm/pendulum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "adm/reduced.hpp"

namespace adm {

namespace {

// Z_{m,k} with the component series substituted for u_1..u_{m-k+1}.
// components[i] holds the series u_{i+1}.
template <typename T>
TruncatedSeries<T> substitute_series(const ReducedPolynomial& z,
                                     const std::vector<TruncatedSeries<T>>& components,
                                     int order) {
  TruncatedSeries<T> value(order);
  for (const Monomial& term : z.terms()) {
    TruncatedSeries<T> product =
        TruncatedSeries<T>::constant(from_rational<T>(term.coefficient), order);
    for (const auto& entry : term.exponents.entries()) {
      const auto& base = components[static_cast<std::size_t>(entry.index) - 1];
      product = product * pow(base, entry.multiplicity);
    }
    value += product;
  }
  return value;
}

}  // namespace

void validate(const PendulumProblem& p) {
  if (!(p.geometric_constant > 0)) {
    throw std::invalid_argument("geometric constant b must be positive");
  }
  if (p.components < 1) throw std::invalid_argument("need at least one component (M >= 1)");
  if (p.order < 2 * p.components) {
    throw std::invalid_argument("truncation order must satisfy N >= 2M, got N=" +
                                std::to_string(p.order) + " M=" + std::to_string(p.components));
  }
}

Rational sin_derivative_at_right_angle(unsigned order) {
  switch (order % 4) {
    case 0: return 1;
    case 1: return 0;
    case 2: return -1;
    default: return 0;
  }
}

DerivativeValues<double> sin_derivatives_at(double angle) {
  const double s = std::sin(angle);
  const double c = std::cos(angle);
  return [s, c](unsigned order) -> double {
    switch (order % 4) {
      case 0: return s;
      case 1: return c;
      case 2: return -s;
      default: return -c;
    }
  };
}

template <typename T>
std::vector<TruncatedSeries<T>> pendulum_components(const DerivativeValues<T>& derivative_at_a,
                                                    const T& geometric_constant,
                                                    int components, int order) {
  if (components < 1) throw std::invalid_argument("need at least one component (M >= 1)");
  if (order < 2 * components) throw std::invalid_argument("truncation order must satisfy N >= 2M");

  std::vector<TruncatedSeries<T>> u;  // u[i] = u_{i+1}
  u.reserve(static_cast<std::size_t>(components));
  for (int m = 0; m < components; ++m) {
    // A_m on the series components: A_0 = F(a); otherwise u0 is the constant
    // a, so each part is a scalar derivative value times Z_{m,k}(series).
    TruncatedSeries<T> a_m(order);
    if (m == 0) {
      a_m = TruncatedSeries<T>::constant(derivative_at_a(0), order);
    } else {
      const AdomianPolynomial a_poly = adomian_polynomial(m);
      for (const ReducedPolynomial& z : a_poly.parts()) {
        a_m += substitute_series<T>(z, u, order) * derivative_at_a(static_cast<unsigned>(z.k()));
      }
    }
    u.push_back(-integrate_twice(a_m * geometric_constant));
  }
  return u;
}

template std::vector<TruncatedSeries<double>> pendulum_components<double>(
    const DerivativeValues<double>&, const double&, int, int);
template std::vector<TruncatedSeries<Rational>> pendulum_components<Rational>(
    const DerivativeValues<Rational>&, const Rational&, int, int);

TruncatedSeries<double> pendulum_solve(const PendulumProblem& p, const DerivativeOracle<double>& f) {
  validate(p);
  const double a = p.initial_angle;
  DerivativeValues<double> at_a = [&f, a](unsigned order) { return f(order, a); };
  TruncatedSeries<double> solution =
      pendulum_deviation<double>(at_a, p.geometric_constant, p.components, p.order);
  solution.set(0, solution[0] + a);
  return solution;
}

PendulumState rk4_step(const PendulumState& state, double geometric_constant, double dt) {
  const auto acceleration = [geometric_constant](double angle) {
    return -geometric_constant * std::sin(angle);
  };
  const double k1u = state.velocity;
  const double k1v = acceleration(state.angle);
  const double k2u = state.velocity + 0.5 * dt * k1v;
  const double k2v = acceleration(state.angle + 0.5 * dt * k1u);
  const double k3u = state.velocity + 0.5 * dt * k2v;
  const double k3v = acceleration(state.angle + 0.5 * dt * k2u);
  const double k4u = state.velocity + dt * k3v;
  const double k4v = acceleration(state.angle + dt * k3u);
  return {state.angle + dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
          state.velocity + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

PendulumState reference_state(const PendulumProblem& p, double t_end, int steps) {
  if (steps < 1) throw std::invalid_argument("need at least one step");
  PendulumState state{p.initial_angle, 0.0};
  const double dt = t_end / steps;
  for (int i = 0; i < steps; ++i) state = rk4_step(state, p.geometric_constant, dt);
  return state;
}

double reference_integrate(const PendulumProblem& p, double t_end, int steps) {
  return reference_state(p, t_end, steps).angle;
}

}  // namespace adm
