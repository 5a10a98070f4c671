#ifndef ADM_SERIES_HPP
#define ADM_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace adm {

/// Power series in t truncated at a fixed degree bound. All ring operations
/// discard coefficients above the bound. T is an exact rational type or a
/// floating type; both operands of a binary operation must share the bound.
template <typename T>
class TruncatedSeries {
 public:
  /// The zero series of the given truncation order (degree bound).
  explicit TruncatedSeries(int order) : coefficients_(check_order(order) + 1, T(0)) {}

  static TruncatedSeries constant(const T& value, int order) {
    TruncatedSeries s(order);
    s.coefficients_[0] = value;
    return s;
  }

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }

  const T& operator[](int degree) const { return coefficients_.at(static_cast<std::size_t>(degree)); }

  void set(int degree, T value) { coefficients_.at(static_cast<std::size_t>(degree)) = std::move(value); }

  const std::vector<T>& coefficients() const { return coefficients_; }

  bool is_zero() const {
    for (const T& c : coefficients_) {
      if (c != T(0)) return false;
    }
    return true;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    require_same_order(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    require_same_order(other);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    return *this;
  }

  TruncatedSeries& operator*=(const T& scalar) {
    for (T& c : coefficients_) c *= scalar;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& scalar) { return a *= scalar; }
  friend TruncatedSeries operator*(const T& scalar, TruncatedSeries a) { return a *= scalar; }

  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (T& c : a.coefficients_) c = -c;
    return a;
  }

  /// Truncated Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries out(a.order());
    const std::size_t size = a.coefficients_.size();
    for (std::size_t i = 0; i < size; ++i) {
      if (a.coefficients_[i] == T(0)) continue;
      for (std::size_t j = 0; i + j < size; ++j) {
        out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    return order;
  }

  void require_same_order(const TruncatedSeries& other) const {
    if (coefficients_.size() != other.coefficients_.size()) {
      throw std::invalid_argument("truncation orders differ");
    }
  }

  std::vector<T> coefficients_;
};

/// s^exponent by repeated truncated multiplication; exponent >= 0.
template <typename T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& s, int exponent) {
  if (exponent < 0) throw std::invalid_argument("series exponent must be >= 0");
  TruncatedSeries<T> out = TruncatedSeries<T>::constant(T(1), s.order());
  for (int i = 0; i < exponent; ++i) out = out * s;
  return out;
}

/// The double integral from 0 applied twice: c_n goes to degree n+2 with
/// value c_n / ((n+1)(n+2)); degrees beyond the bound are discarded, degrees
/// 0 and 1 of the result are zero.
template <typename T>
TruncatedSeries<T> integrate_twice(const TruncatedSeries<T>& s) {
  TruncatedSeries<T> out(s.order());
  for (int n = 0; n + 2 <= s.order(); ++n) {
    out.set(n + 2, s[n] / T((n + 1) * (n + 2)));
  }
  return out;
}

/// Horner evaluation of the truncated polynomial at t.
template <typename T>
T evaluate_series(const TruncatedSeries<T>& s, const T& t) {
  T value(0);
  for (int n = s.order(); n >= 0; --n) {
    value = value * t + s[n];
  }
  return value;
}

}  // namespace adm

#endif  // ADM_SERIES_HPP
