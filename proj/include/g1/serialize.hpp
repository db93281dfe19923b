#pragma once

// JSON shapes for reports. Field order is fixed (ordered_json), so identical
// input gives byte-identical output.

#include "g1/invariants.hpp"
#include "g1/lattice.hpp"
#include "g1/psl.hpp"

#include <nlohmann/json.hpp>

namespace g1 {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational &r) {
  return Json{{"value", r.str()}, {"decimal", r.decimal(6)}};
}

inline Json to_json(const InvariantReport &r) {
  Json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["sigma1"] = to_json(r.sigma1);
  j["psi"] = r.psi;
  j["k"] = r.k;
  j["k_prime"] = r.k_prime;
  j["frattini_order"] = r.frattini_order;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["fitting_free"] = r.fitting_free;
  j["subgroups"] = r.subgroup_count;
  j["subgroup_classes"] = r.subgroup_class_count;
  j["element_class_sizes"] = r.element_class_sizes;
  return j;
}

inline std::string generators_string(const Lattice &lat, std::size_t i) {
  const auto &gens = lat.entry(i).gens;
  if (gens.empty())
    return "[]";
  std::string s = "[";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k)
      s += ", ";
    s += lat.group().element(gens[k]).to_cycle_string();
  }
  return s + "]";
}

inline Json to_json(const Lattice &lat) {
  Json j;
  Json census = Json::object();
  for (auto [order, count] : lat.census())
    census[std::to_string(order)] = count;
  j["group_order"] = lat.group().order();
  j["subgroups"] = lat.size();
  j["census"] = census;
  Json classes = Json::array();
  for (const auto &cls : lat.classes()) {
    const std::size_t rep = cls.front();
    const auto &e = lat.entry(rep);
    classes.push_back(Json{{"order", e.order},
                           {"size", cls.size()},
                           {"representative", generators_string(lat, rep)},
                           {"normal", e.normal},
                           {"maximal", e.maximal},
                           {"cyclic", e.cyclic},
                           {"abelian", e.abelian},
                           {"elementary_abelian", e.elementary_abelian}});
  }
  j["classes"] = classes;
  return j;
}

inline Json to_json(const PslBound &b) {
  return Json{{"p", b.p},
              {"q", b.q.str()},
              {"full", to_json(b.full)},
              {"truncated", to_json(b.truncated)},
              {"intermediate", to_json(b.intermediate)},
              {"simplified", to_json(b.simplified)}};
}

inline Json to_json(const Census &c) {
  Json cyc = Json::array();
  for (const auto &r : c.cyclic)
    cyc.push_back(Json{{"order", r.order}, {"count", r.count.str()}});
  Json ea = Json::array();
  for (const auto &r : c.elementary_abelian)
    ea.push_back(Json{{"order", r.order}, {"count", r.count.str()}});
  return Json{{"p", c.p},
              {"q", c.q},
              {"cyclic", cyc},
              {"elementary_abelian", ea},
              {"maximal_classes", c.maximal_classes}};
}

inline Json to_json(const CensusCheck &c) {
  Json rows = Json::array();
  for (const auto &r : c.rows)
    rows.push_back(Json{{"check", r.label},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"ok", r.ok}});
  return Json{{"p", c.p}, {"sigma1", to_json(c.sigma1)}, {"rows", rows},
              {"ok", c.ok()}};
}

} // namespace g1
