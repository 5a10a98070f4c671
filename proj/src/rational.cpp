#include "adm/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace adm {

BigInt factorial(unsigned n) {
  static std::mutex mutex;
  static std::vector<BigInt> table = {1, 1};  // 0!, 1!

  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

std::string format_rational(const Rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += "/" + denominator(value).str();
  }
  return text;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator");
    }
    if (den < 0) {  // the Rational constructor rejects negative denominators
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

}  // namespace adm
