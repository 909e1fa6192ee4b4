#pragma once

// JSON renderings of every result type. Key order is fixed (ordered_json) so
// identical results give byte-identical documents.

#include <string>

#include "json.hpp"
#include "rsid/bounds.hpp"
#include "rsid/construct.hpp"

namespace rsid {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json json_header(const char* command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

inline Json to_json(const Polynomial& p) {
  Json j;
  j["coefficients"] = p.coeffs();
  j["text"] = p.to_string();
  return j;
}

inline Json to_json(const IncreasingSequence& s) { return Json(s.indices()); }

inline Json to_json(const PairWitness& w) {
  Json j;
  j["f"] = to_json(w.f);
  j["g"] = to_json(w.g);
  j["I"] = to_json(w.I);
  j["J"] = to_json(w.J);
  return j;
}

inline Json to_json(const EvaluationVector& a) {
  Json j;
  j["field"] = format_field(a.field());
  j["alpha"] = a.points();
  return j;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["n"] = r.n;
  j["k"] = r.k;
  j["lcs_of_code"] = r.lcs_of_code;
  j["max_correctable"] = r.max_correctable;
  j["half_singleton"] = half_singleton(r.n, r.k);
  j["optimal"] = r.optimal;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const CertificateResult& r) {
  Json j;
  j["method"] = to_string(Method::RankCertificate);
  j["t"] = r.t;
  j["l"] = r.l;
  j["verdict"] = r.certified ? "Certified" : "Inconclusive";
  // With early exit the number of pairs examined depends on scheduling, so it
  // is reported only when every pair was examined.
  j["pairs_checked"] = r.certified ? Json(r.pairs_checked) : Json(nullptr);
  if (r.witness) {
    Json w;
    w["I"] = to_json(r.witness->first);
    w["J"] = to_json(r.witness->second);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const OptimalityResult& r) {
  Json j;
  j["method"] = to_string(Method::NormalizedEnumeration);
  j["verdict"] = r.optimal ? "Optimal" : "NotOptimal";
  j["family_size"] = r.family_size;
  j["index_pairs"] = r.index_pairs;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const BadOrderingVerdict& v) {
  Json j;
  j["bad"] = v.bad;
  j["reason"] = to_string(v.reason);
  if (v.bad) {
    Json w;
    w["lambda"] = v.map.lambda;
    w["mu"] = v.map.mu;
    w["theta"] = v.theta;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline std::string ratio_string(std::uint64_t a, std::uint64_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

inline Json to_json(const CensusResult& c) {
  Json j;
  j["q"] = c.q;
  j["classes_total"] = c.classes_total;
  j["classes_correcting_one"] = c.classes_correcting;
  j["classes_verified"] = c.classes_verified;
  j["ratio"] = ratio_string(c.classes_correcting, c.classes_total);
  j["proportion"] = format_proportion(c.proportion());
  Json bad = Json::array();
  for (const auto& b : c.bad_classes) {
    Json e;
    e["index"] = b.index;
    e["alpha"] = b.alpha;
    e["verdict"] = to_json(b.verdict);
    bad.push_back(e);
  }
  j["bad_classes"] = bad;
  return j;
}

inline Json to_json(const SampleResult& s) {
  Json j;
  j["q"] = s.q;
  j["delta"] = s.delta;
  j["seed"] = s.seed;
  j["trials"] = s.lcs.size();
  j["ell"] = s.ell;
  j["lcs"] = s.lcs;
  j["corrects_target"] = s.corrects_target;
  j["fraction_target"] = s.fraction_target() ? Json(*s.fraction_target()) : Json(nullptr);
  j["corrects_one"] = s.corrects_one;
  j["fraction_one"] = s.fraction_one() ? Json(*s.fraction_one()) : Json(nullptr);
  return j;
}

inline Json to_json(const ConstructionTrace& t) {
  Json j;
  j["field"] = format_field(t.field);
  j["k"] = t.k;
  j["min_q"] = t.min_q;
  Json stages = Json::array();
  for (const auto& s : t.stages) {
    Json e;
    e["i"] = s.i;
    e["bad_pair_count"] = s.bad_pair_count;
    e["chosen_pair"] = {s.chosen.first, s.chosen.second};
    e["verification"] = to_string(s.verification);
    if (s.i >= 3) {
      Json st;
      st["index_pairs"] = s.stats.index_pairs;
      st["index_pairs_skipped"] = s.stats.index_pairs_skipped;
      st["systems_solved"] = s.stats.systems_solved;
      st["degenerate"] = s.stats.degenerate;
      st["bad_pair_ceiling"] = s.stats.bad_pair_ceiling;
      e["stats"] = st;
    }
    stages.push_back(e);
  }
  j["stages"] = stages;
  j["alpha"] = t.alpha;
  j["alpha_text"] = format_field(t.field) + ":" + format_index_list(t.alpha);
  return j;
}

inline Json to_json(const Claim8Result& r) {
  Json j;
  j["q"] = r.q;
  j["delta"] = r.delta;
  j["l"] = r.l;
  j["in_regime"] = r.in_regime;
  j["precision_bits"] = kLogPrecisionBits;
  j["log_lhs"] = r.log_lhs ? Json(format_log(*r.log_lhs)) : Json(nullptr);
  j["log_rhs"] = r.log_rhs ? Json(format_log(*r.log_rhs)) : Json(nullptr);
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  return j;
}

}  // namespace rsid
