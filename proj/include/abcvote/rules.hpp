#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcvote/profile.hpp"
#include "abcvote/rational.hpp"

namespace abc {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One selection round. `tied` lists everything that achieved the deciding
// value (ascending); ties are always broken toward the front of the tie
// order. For gspav the entries of `tied` are group indices, for every other
// rule candidate indices. `filler` marks seats handed out because no
// approvable candidate was left.
struct TraceRound {
  int chosen = -1;
  Rational quantity;
  std::vector<int> tied;
  bool filler = false;
  int swapped_out = -1;                // ls_pav: the removed candidate
  std::vector<long long> group_reps;   // gspav: r(G) after this round
  std::vector<Rational> loads;         // seq_phragmen: voter loads after this round
};

struct SelectionTrace {
  std::string rule;
  std::vector<TraceRound> rounds;
  std::optional<Rational> optimal_score;  // pav_exact only
  std::uint64_t optima_count = 0;         // pav_exact only
  std::uint64_t nodes = 0;
};

struct RuleResult {
  Committee committee;
  SelectionTrace trace;
};

// Optional candidate tie order for tie-closure reruns: priority[c] ranks
// candidate c, lower rank wins ties. Null means plain index order.
using TieOrder = const std::vector<int>*;

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

Rational pav_score(const ApprovalProfile& profile, const Committee& committee);

RuleResult seqpav(const ApprovalProfile& profile, int k, TieOrder order = nullptr);
RuleResult revseqpav(const ApprovalProfile& profile, int k, TieOrder order = nullptr);
RuleResult gspav(const ApprovalProfile& profile, int k);
RuleResult seq_phragmen(const ApprovalProfile& profile, int k,
                        bool fill_unapprovable = true, TieOrder order = nullptr);
RuleResult ls_pav(const ApprovalProfile& profile, int k, TieOrder order = nullptr);

struct PavExactResult {
  Committee committee;  // lexicographically smallest optimum
  Rational score;
  SelectionTrace trace;  // no rounds; records score, optima count, nodes
};

// Depth-first branch and bound; throws BudgetExceeded rather than
// approximating when the node budget runs out.
PavExactResult pav_exact(const ApprovalProfile& profile, int k,
                         std::uint64_t node_budget = kDefaultNodeBudget);

// Every PAV-optimal committee, in lexicographic member-set order.
std::vector<Mask> pav_all_optima(const ApprovalProfile& profile, int k,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace abc
