#include "adm/reduced.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace adm {

namespace {

Rational inverse_factorial_product(const MultiplicityVector& exponents) {
  BigInt denominator = 1;
  for (const auto& entry : exponents.entries()) {
    denominator *= factorial(static_cast<unsigned>(entry.multiplicity));
  }
  return Rational(1, denominator);
}

std::vector<ClosedFormTemplate> build_closed_forms() {
  using Entry = MultiplicityVector::Entry;
  auto term = [](int offset, std::vector<Entry> fixed) {
    BigInt denom = 1;
    for (const Entry& e : fixed) denom *= factorial(static_cast<unsigned>(e.multiplicity));
    return ClosedFormTemplate::Term{offset, std::move(fixed), std::move(denom)};
  };

  std::vector<ClosedFormTemplate> forms(6);
  // Z_{m,m} = u1^m / m!
  forms[0] = {0, {term(0, {})}};
  // Z_{m,m-1} = u1^{m-2} u2 / (m-2)!
  forms[1] = {1, {term(2, {{2, 1}})}};
  // Z_{m,m-2} = u1^{m-3} u3 / (m-3)!  +  u1^{m-4} u2^2 / ((m-4)! 2!)
  forms[2] = {2, {term(3, {{3, 1}}), term(4, {{2, 2}})}};
  // Z_{m,m-3}: u4, u2 u3, u2^3
  forms[3] = {3, {term(4, {{4, 1}}), term(5, {{2, 1}, {3, 1}}), term(6, {{2, 3}})}};
  // Z_{m,m-4}: u5, u2 u4, u3^2, u2^2 u3, u2^4
  forms[4] = {4,
              {term(5, {{5, 1}}), term(6, {{2, 1}, {4, 1}}), term(6, {{3, 2}}),
               term(7, {{2, 2}, {3, 1}}), term(8, {{2, 4}})}};
  // Z_{m,m-5}: u6, u3 u4, u2 u5, u2 u3^2, u2^2 u4, u2^3 u3, u2^5
  forms[5] = {5,
              {term(6, {{6, 1}}), term(7, {{3, 1}, {4, 1}}), term(7, {{2, 1}, {5, 1}}),
               term(8, {{2, 1}, {3, 2}}), term(8, {{2, 2}, {4, 1}}),
               term(9, {{2, 3}, {3, 1}}), term(10, {{2, 5}})}};
  return forms;
}

}  // namespace

ReducedPolynomial::ReducedPolynomial(int m, int k, std::vector<Monomial> terms)
    : m_(m), k_(k), terms_(std::move(terms)) {
  if (m_ < 1 || k_ < 1 || k_ > m_) {
    throw std::invalid_argument("reduced polynomial requires 1 <= k <= m");
  }
  for (const Monomial& t : terms_) {
    if (t.coefficient == 0) throw std::invalid_argument("zero coefficient in reduced polynomial");
    if (t.exponents.m() != m_ || t.exponents.k() != k_) {
      throw std::invalid_argument("monomial does not belong to this (m, k)");
    }
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!canonical_less(terms_[i - 1].exponents, terms_[i].exponents)) {
      throw std::invalid_argument("terms not in canonical order or duplicated");
    }
  }
}

ReducedPolynomial reduced_polynomial(int m, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw std::invalid_argument("reduced_polynomial requires 1 <= k <= m, got m=" +
                                std::to_string(m) + " k=" + std::to_string(k));
  }
  std::vector<Monomial> terms;
  for (MultiplicityVector& solution : enumerate(m, k)) {
    Rational coefficient = inverse_factorial_product(solution);
    terms.push_back(Monomial{std::move(coefficient), std::move(solution)});
  }
  return ReducedPolynomial(m, k, std::move(terms));
}

const ClosedFormTemplate& closed_form(int j) {
  static const std::vector<ClosedFormTemplate> forms = build_closed_forms();
  if (j < 0 || j > 5) {
    throw std::invalid_argument("closed forms exist for j in 0..5, got j=" + std::to_string(j));
  }
  return forms[static_cast<std::size_t>(j)];
}

ReducedPolynomial instantiate(const ClosedFormTemplate& tmpl, int m) {
  if (m <= tmpl.j) {
    throw std::invalid_argument("instantiation needs m >= j + 1, got m=" + std::to_string(m) +
                                " j=" + std::to_string(tmpl.j));
  }
  const int k = m - tmpl.j;
  std::vector<Monomial> terms;
  for (const auto& t : tmpl.terms) {
    const int u1_exponent = m - t.offset;
    if (u1_exponent < 0) continue;  // not a solution in N for this m
    std::vector<MultiplicityVector::Entry> entries;
    if (u1_exponent > 0) entries.push_back({1, u1_exponent});
    entries.insert(entries.end(), t.fixed.begin(), t.fixed.end());
    Rational coefficient(1, factorial(static_cast<unsigned>(u1_exponent)) * t.fixed_factorials);
    terms.push_back(Monomial{std::move(coefficient), MultiplicityVector(m, k, std::move(entries))});
  }
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    return canonical_less(a.exponents, b.exponents);
  });
  return ReducedPolynomial(m, k, std::move(terms));
}

std::string to_text(const Monomial& term) {
  std::string out;
  if (term.coefficient != 1) {
    out += format_rational(term.coefficient);
    out += "*";
  }
  bool first = true;
  for (const auto& entry : term.exponents.entries()) {
    if (!first) out += "*";
    first = false;
    out += "u" + std::to_string(entry.index);
    if (entry.multiplicity > 1) out += "^" + std::to_string(entry.multiplicity);
  }
  return out;
}

std::string to_text(const ReducedPolynomial& z) {
  std::string out;
  for (std::size_t i = 0; i < z.terms().size(); ++i) {
    if (i > 0) out += " + ";
    out += to_text(z.terms()[i]);
  }
  return out;
}

}  // namespace adm
