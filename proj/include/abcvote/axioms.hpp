#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "abcvote/profile.hpp"

namespace abc {

enum class Axiom { JR, PJR, EJR, CJR, StrictCore, Quota };

std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

// (X, l) certificate of a JR/PJR/EJR violation; `common` holds the l
// candidates every voter in X approves.
struct CohesiveWitness {
  Mask voters = 0;
  int ell = 0;
  Mask common = 0;
};

// (X, l, D) certificate of a CJR or strict-core violation.
struct BlockingWitness {
  Mask voters = 0;
  int ell = 0;
  Mask deviating = 0;       // D, |D| = l
  Mask strict_members = 0;  // strict core: voters with a strict improvement
};

struct AxiomVerdict {
  Axiom axiom;
  bool satisfied = true;
  std::optional<CohesiveWitness> cohesive;
  std::optional<BlockingWitness> blocking;
  int ell_lo = 0, ell_hi = 0;         // range of l checked
  int quota_group = -1;               // quota check: offending group index
  std::uint64_t sets_examined = 0;
};

// Work budget for the exponential checkers (candidate sets examined).
// Exceeding it throws BudgetExceeded; there is no "assumed satisfied".
inline constexpr std::uint64_t kDefaultAxiomBudget = 1'000'000'000;

AxiomVerdict check_jr(const ApprovalProfile& p, const Committee& w);
AxiomVerdict check_pjr(const ApprovalProfile& p, const Committee& w,
                       std::optional<int> ell = std::nullopt,
                       std::uint64_t budget = kDefaultAxiomBudget);
AxiomVerdict check_ejr(const ApprovalProfile& p, const Committee& w,
                       std::optional<int> ell = std::nullopt,
                       std::uint64_t budget = kDefaultAxiomBudget);
AxiomVerdict check_cjr(const ApprovalProfile& p, const Committee& w,
                       std::uint64_t budget = kDefaultAxiomBudget);
AxiomVerdict check_strict_core(const ApprovalProfile& p, const Committee& w,
                               std::uint64_t budget = kDefaultAxiomBudget);
AxiomVerdict check_polarized_quota(const ApprovalProfile& p, const Committee& w);

AxiomVerdict check_axiom(Axiom a, const ApprovalProfile& p, const Committee& w,
                         std::optional<int> ell = std::nullopt,
                         std::uint64_t budget = kDefaultAxiomBudget);

// Definition-level witness revalidation. Deliberately shares no code with the
// searchers above: plain loops straight off the definitions.
bool revalidate_witness(const ApprovalProfile& p, const Committee& w,
                        const AxiomVerdict& verdict);

}  // namespace abc
