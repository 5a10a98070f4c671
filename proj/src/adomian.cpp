#include "adm/adomian.hpp"

#include <stdexcept>
#include <string>

#include "adm/json_io.hpp"

namespace adm {

AdomianPolynomial::AdomianPolynomial(int m, std::vector<ReducedPolynomial> parts)
    : m_(m), parts_(std::move(parts)) {
  if (m_ < 0) throw std::invalid_argument("Adomian polynomial order must be >= 0");
  if (static_cast<int>(parts_.size()) != m_) {
    throw std::invalid_argument("A_m must carry exactly m parts");
  }
  for (int k = 1; k <= m_; ++k) {
    const ReducedPolynomial& z = parts_[static_cast<std::size_t>(k) - 1];
    if (z.m() != m_ || z.k() != k) {
      throw std::invalid_argument("part " + std::to_string(k) + " is not Z_{m," + std::to_string(k) + "}");
    }
  }
}

AdomianPolynomial adomian_polynomial(int m) {
  std::vector<ReducedPolynomial> parts;
  parts.reserve(static_cast<std::size_t>(m < 0 ? 0 : m));
  for (int k = 1; k <= m; ++k) parts.push_back(reduced_polynomial(m, k));
  return AdomianPolynomial(m, std::move(parts));
}

std::uint64_t monomial_count(int m) {
  if (m < 0) throw std::invalid_argument("Adomian polynomial order must be >= 0");
  if (m == 0) return 1;  // the single symbol F(u0)
  std::uint64_t total = 0;
  for (int k = 1; k <= m; ++k) total += count(m, k);
  return total;
}

std::string render(const AdomianPolynomial& a, RenderFormat format) {
  switch (format) {
    case RenderFormat::json:
      return to_json(a).dump(2);
    case RenderFormat::text: {
      if (a.m() == 0) return "F(u0)";
      std::string out;
      for (const ReducedPolynomial& z : a.parts()) {
        if (!out.empty()) out += " + ";
        const std::string factor = "F^(" + std::to_string(z.k()) + ")(u0)";
        if (z.terms().size() == 1) {
          out += to_text(z.terms().front()) + "*" + factor;
        } else {
          out += "(" + to_text(z) + ")*" + factor;
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown render format");
}

}  // namespace adm
