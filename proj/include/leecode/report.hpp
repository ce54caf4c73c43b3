#pragma once

// Full analysis of a lattice code and its JSON rendering (fixed key order).

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "analyzer.hpp"
#include "constructions.hpp"
#include "intlat.hpp"

namespace leecode {

struct AnalyzeOptions {
  std::int64_t min_dist_cap = 64;
  std::uint64_t coset_cap = kDefaultCosetCap;
};

struct AnalysisReport {
  CodeParams params;
  Rational volume;
  Period period;
  std::optional<std::int64_t> covering_radius;  // empty when the coset table exceeds the cap
  Certificate certificate;
};

inline AnalysisReport analyze(const Lattice& lat, const AnalyzeOptions& opt = {}) {
  AnalysisReport r;
  r.volume = lat.volume();
  r.period = period(lat);
  const std::int64_t d = min_distance_auto(lat, 1, opt.min_dist_cap);
  r.params = reduce_mod_period(lat, Integer(static_cast<long>(d)));
  try {
    r.covering_radius = covering_radius(lat, opt.coset_cap);
  } catch (const SizeError&) {
  }
  r.certificate = certify(lat, r.params.d);
  return r;
}

using ordered_json = nlohmann::ordered_json;

inline ordered_json rational_json(const Rational& q) {
  ordered_json j;
  j["rational"] = to_fraction_string(q);
  j["decimal"] = to_decimal_string(q, 6);
  return j;
}

inline ordered_json to_json(const Certificate& c) {
  ordered_json j;
  j["kind"] = to_string(c.kind);
  j["bound"] = c.bound;
  j["radius"] = c.radius;
  j["reference"] = c.reference.get_str();
  j["slack"] = c.slack.get_str();
  return j;
}

// Integers are rendered as JSON strings so arbitrary precision survives.
inline ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["n"] = r.params.n;
  j["d"] = r.params.d.get_str();
  j["volume"] = r.params.v.get_str();
  ordered_json per = ordered_json::array();
  for (const auto& m : r.period.per_axis) per.push_back(m.get_str());
  j["period"] = per;
  j["q"] = r.params.q.get_str();
  j["density"] = rational_json(r.params.density);
  if (r.covering_radius)
    j["covering_radius"] = *r.covering_radius;
  else
    j["covering_radius"] = nullptr;
  j["certificate"] = to_json(r.certificate);
  return j;
}

inline ordered_json to_json(const CodeParams& p) {
  ordered_json j;
  j["n"] = p.n;
  j["d"] = p.d.get_str();
  j["volume"] = p.v.get_str();
  j["q"] = p.q.get_str();
  j["density"] = rational_json(p.density);
  return j;
}

inline ordered_json to_json(const Dim4Reconciliation& r) {
  ordered_json j;
  j["construction"] = "dim4";
  j["nominal_d"] = r.nominal_d;
  j["measured"] = to_json(r.measured);
  j["measured_volume_coefficient"] = to_fraction_string(r.measured_volume_coeff);
  ordered_json claimed;
  claimed["volume_coefficient"] = to_fraction_string(r.claimed_volume_coeff);
  claimed["alphabet_coefficient"] = to_fraction_string(r.claimed_q_coeff);
  claimed["density"] = rational_json(r.claimed_density);
  j["claimed"] = claimed;
  j["density_consistent"] = r.density_consistent;
  j["discrepancy"] = r.note;
  return j;
}

}  // namespace leecode
