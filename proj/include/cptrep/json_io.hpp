#pragma once

/// \file json_io.hpp
/// JSON import/export.  Groups round-trip: the import path rebuilds a
/// FiniteGroup through its validating constructor, so a tampered file is
/// rejected with the same diagnostics as any other bad Cayley table.
/// Exact numbers are written as [numerator, denominator] integer pairs;
/// values that do not fit a 64-bit signed integer are refused rather
/// than silently rounded.

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "character_table.hpp"
#include "cpt/verify.hpp"
#include "finite_group.hpp"

namespace cptrep {

using Json = nlohmann::json;

namespace json_detail {

inline long long to_int64(const Int& v, const std::string& what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::range_error("json export: " + what + " does not fit in 64 bits");
  return v.convert_to<long long>();
}

}  // namespace json_detail

// ---- Cyclotomic: {"order": n, "coeffs": [[num, den], ...]} over the
// power basis of zeta_n.

inline Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const Rational& r : c.coeffs())
    coeffs.push_back({json_detail::to_int64(r.num(), "numerator"),
                      json_detail::to_int64(r.den(), "denominator")});
  return Json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  const unsigned order = j.at("order").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const Json& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("cyclotomic_from_json: coefficient is not a [num, den] pair");
    coeffs.emplace_back(Int(pair.at(0).get<long long>()), Int(pair.at(1).get<long long>()));
  }
  return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

// ---- FiniteGroup: {"order", "labels", "cayley", "generators"}.

inline Json to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()},
              {"labels", g.labels()},
              {"cayley", g.cayley()},
              {"generators", g.generators()}};
}

/// Reconstructs a group from its export.  All group axioms are verified
/// again by the FiniteGroup constructor; nothing in the file is trusted.
inline GroupPtr group_from_json(const Json& j) {
  const auto order = j.at("order").get<std::size_t>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  auto cayley = j.at("cayley").get<std::vector<ElementId>>();
  auto generators = j.at("generators").get<std::vector<ElementId>>();
  if (labels.size() != order)
    throw std::invalid_argument("group_from_json: order does not match the label count");
  return std::make_shared<const FiniteGroup>(std::move(labels), std::move(cayley),
                                             std::move(generators));
}

// ---- CharacterTable: class columns with sizes and representatives,
// rows with exact values and provenance.

inline Json to_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group();
  Json classes = Json::array();
  for (const auto& c : t.classes())
    classes.push_back(Json{{"label", "[" + g.label(c.representative) + "]"},
                           {"size", c.size()},
                           {"representative", g.label(c.representative)}});
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    const auto& row = t.rows()[i];
    Json values = Json::array();
    for (const Cyclotomic& v : row.character.values()) values.push_back(to_json(v));
    rows.push_back(Json{{"name", row.name},
                        {"dim", t.dimension(i)},
                        {"values", std::move(values)},
                        {"provenance", to_string(row.provenance)}});
  }
  Json out{{"group_order", g.order()},
           {"classes", std::move(classes)},
           {"rows", std::move(rows)}};
  if (t.dixon_prime()) out["dixon_prime"] = *t.dixon_prime();
  return out;
}

// ---- Verifier report.

inline Json to_json(const cpt::Finding& f) {
  return Json{{"location", f.location},
              {"expected", f.expected},
              {"computed", f.computed},
              {"verdict", cpt::to_string(f.verdict)},
              {"note", f.note}};
}

inline Json to_json(const cpt::DiscrepancyReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(to_json(f));
  return Json{{"findings", std::move(findings)},
              {"counts",
               Json{{"match", r.count(cpt::Verdict::match)},
                    {"paper-defect-confirmed", r.count(cpt::Verdict::paper_defect_confirmed)},
                    {"mismatch", r.count(cpt::Verdict::mismatch)}}},
              {"clean", r.clean()}};
}

}  // namespace cptrep
