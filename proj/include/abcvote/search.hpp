#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcvote/axioms.hpp"
#include "abcvote/generate.hpp"
#include "abcvote/rules.hpp"

namespace abc {

enum class RuleId { GSPAV, SeqPAV, RevSeqPAV, PAV, Phragmen, LsPAV };

std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

RuleResult run_rule(RuleId rule, const ApprovalProfile& p, int k,
                    TieOrder order = nullptr,
                    std::uint64_t node_budget = kDefaultNodeBudget);

struct Violation {
  ApprovalProfile profile;
  int k = 0;
  Committee committee;
  AxiomVerdict verdict;
  std::uint64_t instance_index = 0;
};

struct SearchReport {
  std::string mode;  // "exhaustive" | "randomized"
  std::string rule, axiom;
  int n_max = 0, m_max = 0, k_max = 0;
  std::uint64_t samples = 0, seed = 0;
  std::uint64_t instances = 0;        // instances actually examined
  std::uint64_t skipped = 0;          // e.g. non-polarized inputs for gspav
  std::uint64_t expected_total = 0;   // closed-form stream length (exhaustive)
  std::vector<Violation> violations;
  bool complete = true;
  std::uint64_t checkpoint = 0;       // resume index when incomplete
  double wall_seconds = 0;            // reporting only; never serialized to JSON
};

// Runs `rule` on every enumerated (profile, k) and checks `axiom` on the
// output. Every reported violation has been revalidated. `threads` splits the
// enumeration into contiguous ranges; the merged report is order-independent.
SearchReport exhaustive_verify(RuleId rule, Axiom axiom, int n_max, int m_max,
                               int k_max, int threads = 1,
                               std::uint64_t max_violations = 1000,
                               std::uint64_t start_index = 0);

// Same check over every polarized profile with at most `max_groups` groups,
// group sizes and per-group candidate counts up to the given caps, all k <= m.
SearchReport exhaustive_verify_polarized(RuleId rule, Axiom axiom,
                                         int max_groups, int max_group_size,
                                         int max_cands_per_group);

struct SamplerParams {
  int n_lo = 1, n_hi = 8;
  int m_lo = 1, m_hi = 8;
  int k_lo = 1, k_hi = 8;
  double p = 0.5;
};

// Seed-deterministic randomized hunt; returns the first revalidated violation.
std::optional<Violation> find_violation_random(RuleId rule, Axiom axiom,
                                               const SamplerParams& sampler,
                                               std::uint64_t samples,
                                               std::uint64_t seed,
                                               std::uint64_t* examined = nullptr);

std::optional<Violation> find_violation_exhaustive(RuleId rule, Axiom axiom,
                                                   int n_max, int m_max, int k_max);

struct EmptyCoreInstance {
  ApprovalProfile profile;
  int k = 0;
  // one blocking witness per size-k committee, in lexicographic order
  std::vector<std::pair<Committee, AxiomVerdict>> blocked;
  std::uint64_t instances_scanned = 0;
};

// First instance (enumeration order) where every size-k committee fails
// strict core representation.
std::optional<EmptyCoreInstance> find_empty_strict_core(int n_max, int m_max,
                                                        int k_max);

struct CjrScanReport {
  std::uint64_t instances = 0;
  std::uint64_t cjr_empty = 0;  // instances with no CJR committee
  std::optional<ApprovalProfile> first_empty_profile;
  int first_empty_k = 0;
  double wall_seconds = 0;
};

// Empirical exploration only: whether a CJR committee always exists is an
// open problem and this scan claims nothing beyond the bounds it covered.
CjrScanReport cjr_existence_scan(int n_max, int m_max, int k_max);

// --- monotonicity harnesses ------------------------------------------------

// Outcome set of a rule under tie closure: all PAV optima for PAV, reruns
// under every candidate tie order for the sequential rules (m <= 6), the
// single resolute outcome otherwise.
std::vector<Mask> outcome_set(RuleId rule, const ApprovalProfile& p, int k,
                              bool* resolute_only = nullptr);

struct CommitteeMonoResult {
  bool monotone = true;
  bool resolute_only = false;
  int break_k = 0;            // first k whose outcome fails to extend
  Mask break_committee = 0;   // outcome at break_k with no superset at k+1
};

CommitteeMonoResult check_committee_monotonicity(RuleId rule,
                                                 const ApprovalProfile& p,
                                                 int k_max);

struct CommitteeMonoBreak {
  ApprovalProfile profile;
  int k = 0;
  Mask committee = 0;  // outcome at k with no extension among outcomes at k+1
  std::uint64_t instances_scanned = 0;
};

std::optional<CommitteeMonoBreak> find_committee_mono_break(RuleId rule,
                                                            int n_max, int m_max,
                                                            int k_max);

struct CandidateMonoBreak {
  ApprovalProfile modified;  // profile with the extra approval added
  int voter = -1, candidate = -1;
  Mask before = 0, after = 0;  // committees before/after the added approval
};

// Reruns the rule once per (selected candidate, non-approving voter) pair with
// that single approval added; a selected candidate must never drop out.
std::optional<CandidateMonoBreak> check_candidate_monotonicity(
    RuleId rule, const ApprovalProfile& p, int k);

std::optional<CandidateMonoBreak> find_candidate_mono_break(
    RuleId rule, int n_max, int m_max, int k_max,
    std::uint64_t* instances_scanned = nullptr);

// --- pinned fixtures -------------------------------------------------------

// Fixture files are ordinary profile files plus "#! key value..." directive
// comments (committee, rule, axiom, expect, ...).
struct Fixture {
  ApprovalProfile profile;
  int k = 0;
  std::map<std::string, std::string> directives;

  std::optional<Committee> committee() const;
};

Fixture load_fixture(const std::string& path);
std::string serialize_fixture(const ApprovalProfile& p, int k,
                              const std::map<std::string, std::string>& directives);

}  // namespace abc
