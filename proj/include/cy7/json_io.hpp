// JSON serialization: ideals, family instances, Betti tables, verification
// reports. Generator and term order is canonical, so identical builds give
// byte-identical files.
#pragma once

#include <nlohmann/json.hpp>

#include "cy7/families.hpp"

namespace cy7 {

using json = nlohmann::ordered_json;

inline json polynomial_to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json exps = json::array();
    for (int i = 0; i < f.ring()->nvars(); ++i) exps.push_back(t.m[i]);
    terms.push_back(json::array({t.c, exps}));
  }
  return terms;
}

inline Polynomial polynomial_from_json(const json& j, const RingPtr& ring) {
  std::vector<Term> ts;
  for (const auto& tj : j) {
    fp_t c = ring->field.from_int(tj.at(0).get<long long>());
    const json& exps = tj.at(1);
    if (static_cast<int>(exps.size()) != ring->nvars())
      throw std::invalid_argument("ideal file: exponent width mismatch");
    Monomial m;
    int deg = 0;
    for (int i = 0; i < ring->nvars(); ++i) {
      int e = exps[i].get<int>();
      if (e < 0 || e > 200) throw std::invalid_argument("ideal file: bad exponent");
      m.e[i] = static_cast<uint8_t>(e);
      deg += e;
    }
    m.deg = static_cast<uint16_t>(deg);
    ts.push_back({m, c});
  }
  return Polynomial::from_terms(ring, ring->order, std::move(ts));
}

inline json ideal_to_json(const Ideal& I) {
  json j;
  j["version"] = 1;
  j["char"] = I.ring()->p();
  j["vars"] = I.ring()->vars;
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(polynomial_to_json(g));
  j["gens"] = gens;
  return j;
}

inline Ideal ideal_from_json(const json& j) {
  uint32_t p = j.at("char").get<uint32_t>();
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  RingPtr R = Ring::make(p, vars);
  std::vector<Polynomial> gens;
  for (const auto& gj : j.at("gens")) gens.push_back(polynomial_from_json(gj, R));
  return Ideal(R, std::move(gens));
}

inline json family_instance_to_json(const FamilyInstance& fi) {
  json j = ideal_to_json(fi.ideal);
  json meta;
  meta["family"] = fi.id;
  meta["seed"] = fi.seed;
  meta["attempts"] = fi.attempts;
  json tr = json::array();
  for (const auto& [k, v] : fi.transcript)
    tr.push_back(json::array({k, v}));
  meta["transcript"] = tr;
  j["meta"] = meta;
  return j;
}

inline FamilyInstance family_instance_from_json(const json& j) {
  FamilyInstance fi;
  fi.ideal = ideal_from_json(j);
  fi.characteristic = j.at("char").get<uint32_t>();
  if (j.contains("meta")) {
    const json& meta = j["meta"];
    fi.id = meta.value("family", 0);
    fi.seed = meta.value("seed", uint64_t{0});
    fi.attempts = meta.value("attempts", 1);
    if (meta.contains("transcript"))
      for (const auto& e : meta["transcript"])
        fi.transcript.emplace_back(e.at(0).get<std::string>(),
                                   e.at(1).get<std::string>());
  }
  return fi;
}

inline json betti_to_json(const BettiTable& t) {
  json j;
  j["length"] = t.length;
  json entries = json::array();
  for (const auto& [ij, b] : t.entries)
    entries.push_back(json::array({ij.first, ij.second, b}));
  j["entries"] = entries;
  j["minimal"] = t.minimal;
  return j;
}

inline BettiTable betti_from_json(const json& j) {
  BettiTable t;
  for (const auto& e : j.at("entries"))
    t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int64_t>());
  t.minimal = j.value("minimal", false);
  return t;
}

inline json singular_report_to_json(const SingularLocusReport& r) {
  json j;
  j["strategy"] = r.method == MinorStrategy::full_minors ? "full-minors"
                                                          : "random-minor-batch";
  j["seed"] = r.seed;
  j["minors_used"] = r.minors_used;
  j["minors_available"] = r.minors_available;
  j["dimension"] = r.projective_dimension;
  j["degree"] = r.degree;
  j["exact"] = r.exact;
  j["budget_exhausted"] = r.exhausted_budget;
  j["seconds"] = r.seconds;
  return j;
}

} // namespace cy7
