#include "abcvote/json_io.hpp"

#include "abcvote/rational.hpp"

namespace abc {

Json committee_json(Mask members) { return mask_to_indices(members); }

Json profile_json(const ApprovalProfile& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  Json ballots = Json::array();
  for (Mask b : p.ballots) ballots.push_back(mask_to_indices(b));
  j["ballots"] = std::move(ballots);
  return j;
}

Json trace_json(const SelectionTrace& t) {
  Json j;
  j["rule"] = t.rule;
  Json rounds = Json::array();
  for (size_t r = 0; r < t.rounds.size(); ++r) {
    const TraceRound& tr = t.rounds[r];
    Json jr;
    jr["round"] = r + 1;
    jr["chosen"] = tr.chosen;
    jr["quantity"] = rational_str(tr.quantity);
    jr["tied"] = tr.tied;
    if (tr.filler) jr["filler"] = true;
    if (tr.swapped_out >= 0) jr["swapped_out"] = tr.swapped_out;
    if (!tr.group_reps.empty()) jr["group_reps"] = tr.group_reps;
    if (!tr.loads.empty()) {
      Json loads = Json::array();
      for (const Rational& l : tr.loads) loads.push_back(rational_str(l));
      jr["loads"] = std::move(loads);
    }
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  if (t.optimal_score) {
    j["optimal_score"] = rational_str(*t.optimal_score);
    j["optima_count"] = t.optima_count;
    j["nodes"] = t.nodes;
  }
  return j;
}

Json rule_result_json(const ApprovalProfile& p, const RuleResult& r,
                      const Rational& score) {
  Json j;
  j["rule"] = r.trace.rule;
  j["k"] = r.committee.k;
  j["committee"] = committee_json(r.committee.members);
  j["pav_score"] = rational_str(score);
  j["trace"] = trace_json(r.trace);
  return j;
}

Json verdict_json(const AxiomVerdict& v) {
  Json j;
  j["axiom"] = axiom_name(v.axiom);
  j["satisfied"] = v.satisfied;
  j["ell_range"] = {v.ell_lo, v.ell_hi};
  j["sets_examined"] = v.sets_examined;
  if (v.cohesive) {
    Json w;
    w["voters"] = mask_to_indices(v.cohesive->voters);
    w["ell"] = v.cohesive->ell;
    w["common"] = mask_to_indices(v.cohesive->common);
    j["witness"] = std::move(w);
  }
  if (v.blocking) {
    Json w;
    w["voters"] = mask_to_indices(v.blocking->voters);
    w["ell"] = v.blocking->ell;
    w["deviating"] = mask_to_indices(v.blocking->deviating);
    w["strict_members"] = mask_to_indices(v.blocking->strict_members);
    j["witness"] = std::move(w);
  }
  if (v.quota_group >= 0) j["quota_group"] = v.quota_group;
  return j;
}

Json report_json(const SearchReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["rule"] = r.rule;
  j["axiom"] = r.axiom;
  if (r.mode == "exhaustive") {
    j["bounds"] = {{"n_max", r.n_max}, {"m_max", r.m_max}, {"k_max", r.k_max}};
    j["expected_total"] = r.expected_total;
  } else {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
  }
  j["instances"] = r.instances;
  j["skipped"] = r.skipped;
  j["complete"] = r.complete;
  if (!r.complete) j["checkpoint"] = r.checkpoint;
  Json viols = Json::array();
  for (const Violation& v : r.violations) {
    Json jv;
    jv["instance_index"] = v.instance_index;
    jv["profile"] = profile_json(v.profile);
    jv["k"] = v.k;
    jv["committee"] = committee_json(v.committee.members);
    jv["verdict"] = verdict_json(v.verdict);
    viols.push_back(std::move(jv));
  }
  j["violations"] = std::move(viols);
  return j;
}

}  // namespace abc
