#include "adm/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace adm {

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

Json to_json(const ReducedPolynomial& z) {
  Json out;
  out["m"] = z.m();
  out["k"] = z.k();
  Json terms = Json::array();
  for (const Monomial& term : z.terms()) {
    Json t;
    t["coeff"] = format_rational(term.coefficient);
    Json exps = Json::object();
    for (const auto& entry : term.exponents.entries()) {
      exps[std::to_string(entry.index)] = entry.multiplicity;
    }
    t["exps"] = exps;
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const AdomianPolynomial& a) {
  Json out;
  out["m"] = a.m();
  Json parts = Json::array();
  for (const ReducedPolynomial& z : a.parts()) {
    Json p;
    p["k"] = z.k();
    p["z"] = to_json(z);
    parts.push_back(std::move(p));
  }
  out["parts"] = std::move(parts);
  return out;
}

ReducedPolynomial reduced_from_json(const Json& j) {
  const int m = int_field(j, "m");
  const int k = int_field(j, "k");
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("missing 'terms' array");
  }
  std::vector<Monomial> terms;
  for (const Json& t : j["terms"]) {
    if (!t.contains("coeff") || !t["coeff"].is_string() || !t.contains("exps") || !t["exps"].is_object()) {
      throw std::invalid_argument("term needs a 'coeff' string and an 'exps' object");
    }
    Rational coefficient = parse_rational(t["coeff"].get<std::string>());
    std::vector<MultiplicityVector::Entry> entries;
    for (const auto& [key, value] : t["exps"].items()) {
      entries.push_back({std::stoi(key), value.get<int>()});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
    terms.push_back(Monomial{std::move(coefficient), MultiplicityVector(m, k, std::move(entries))});
  }
  return ReducedPolynomial(m, k, std::move(terms));
}

AdomianPolynomial adomian_from_json(const Json& j) {
  const int m = int_field(j, "m");
  if (!j.contains("parts") || !j["parts"].is_array()) {
    throw std::invalid_argument("missing 'parts' array");
  }
  std::vector<ReducedPolynomial> parts;
  for (const Json& p : j["parts"]) {
    const int k = int_field(p, "k");
    if (!p.contains("z")) throw std::invalid_argument("part missing 'z'");
    ReducedPolynomial z = reduced_from_json(p["z"]);
    if (z.k() != k) throw std::invalid_argument("part key disagrees with nested polynomial");
    parts.push_back(std::move(z));
  }
  return AdomianPolynomial(m, std::move(parts));
}

}  // namespace adm
