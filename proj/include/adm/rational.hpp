#ifndef ADM_RATIONAL_HPP
#define ADM_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace adm {

// Exact arithmetic domain for all symbolic coefficients. cpp_rational keeps
// values in lowest terms with a positive denominator, which is exactly the
// invariant we need; we only add formatting, parsing and factorials on top.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as a big integer. Memoized; safe to call from multiple threads.
BigInt factorial(unsigned n);

/// Renders a rational as "p" (denominator 1) or "p/q", no decimals.
std::string format_rational(const Rational& value);

/// Parses the output of format_rational. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

/// Converts an exact coefficient into the requested scalar domain.
template <typename T>
T from_rational(const Rational& value) {
  return value.convert_to<T>();
}

template <>
inline Rational from_rational<Rational>(const Rational& value) {
  return value;
}

}  // namespace adm

#endif  // ADM_RATIONAL_HPP
