#pragma once

#include <string>

#include <json.hpp>

#include "qsfmf/classification.hpp"
#include "qsfmf/composition_tableaux.hpp"
#include "qsfmf/expansion.hpp"
#include "qsfmf/young_tableaux.hpp"

namespace qsfmf {

using Json = nlohmann::ordered_json;

std::string basis_name(Basis b);
/// Letter used in the text form: F, M or s.
std::string basis_symbol(Basis b);

/// {"basis":..., "degree":n, "terms":[{"index":[...], "coefficient":c}, ...]}
template <Basis B>
Json to_json(const Expansion<B>& e) {
  Json terms = Json::array();
  for (const auto& [key, c] : e.terms()) {
    Json index = Json::array();
    for (int p : key.parts()) index.push_back(p);
    terms.push_back(Json{{"index", std::move(index)}, {"coefficient", c}});
  }
  return Json{{"basis", basis_name(B)}, {"degree", e.degree()}, {"terms", std::move(terms)}};
}

/// One term per line: "c · F[2,1,2,2]".
template <Basis B>
std::string to_text(const Expansion<B>& e) {
  std::string out;
  for (const auto& [key, c] : e.terms()) {
    out += std::to_string(c) + " · " + basis_symbol(B) + "[" + to_string(key) + "]\n";
  }
  return out;
}

/// Rows of integers; cells of a skew inner partition print as "·" (text) or null (JSON).
std::string to_text(const WitnessRecord::Rows& rows);
Json to_json(const WitnessRecord::Rows& rows);

Json to_json(const DescentSet& s);
Json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace qsfmf
