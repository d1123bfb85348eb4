#include "abcvote/axioms.hpp"

// Witness revalidation, written straight off the definitions with plain
// loops. Kept apart from the searchers on purpose: a bug in the search code
// cannot silently vouch for itself here.

namespace abc {

namespace {

std::vector<int> bits(Mask s) { return mask_to_indices(s); }

bool size_bound_holds(int k, int x_size, int ell, int n) {
  // |X| >= ell * n / k, compared as k|X| >= ell*n
  return (long long)k * x_size >= (long long)ell * n;
}

bool revalidate_cohesive(const ApprovalProfile& p, const Committee& w,
                         Axiom axiom, const CohesiveWitness& wit) {
  const auto voters = bits(wit.voters);
  const auto common = bits(wit.common);
  if (voters.empty()) return false;
  if (wit.ell < 1 || (int)common.size() != wit.ell) return false;
  if (!size_bound_holds(w.k, (int)voters.size(), wit.ell, p.n)) return false;
  for (int i : voters) {
    if (i >= p.n) return false;
    for (int c : common)
      if (!has_bit(p.ballots[i], c)) return false;  // not commonly approved
  }
  switch (axiom) {
    case Axiom::JR:
    case Axiom::PJR: {
      if (axiom == Axiom::JR && wit.ell != 1) return false;
      Mask approval_union = 0;
      for (int i : voters) approval_union |= p.ballots[i];
      return popcount(approval_union & w.members) < wit.ell;
    }
    case Axiom::EJR: {
      for (int i : voters)
        if (popcount(p.ballots[i] & w.members) >= wit.ell) return false;
      return true;
    }
    default:
      return false;
  }
}

bool revalidate_blocking(const ApprovalProfile& p, const Committee& w,
                         Axiom axiom, const BlockingWitness& wit) {
  const auto voters = bits(wit.voters);
  if (voters.empty()) return false;
  if (wit.ell < 1 || popcount(wit.deviating) != wit.ell) return false;
  if (wit.deviating & ~full_mask(p.m)) return false;
  if (!size_bound_holds(w.k, (int)voters.size(), wit.ell, p.n)) return false;
  bool some_strict = false;
  for (int i : voters) {
    if (i >= p.n) return false;
    int in_d = popcount(p.ballots[i] & wit.deviating);
    int in_w = popcount(p.ballots[i] & w.members);
    if (axiom == Axiom::CJR) {
      if (!(in_d > in_w)) return false;
    } else {
      if (!(in_d >= in_w)) return false;
      bool strict = in_d > in_w;
      if (has_bit(wit.strict_members, i) && !strict) return false;
      some_strict |= strict;
    }
  }
  if (axiom == Axiom::StrictCore && (!wit.strict_members || !some_strict))
    return false;
  if (wit.strict_members & ~wit.voters) return false;
  return true;
}

bool revalidate_quota(const ApprovalProfile& p, const Committee& w,
                      const AxiomVerdict& verdict) {
  auto part = is_polarized(p);
  if (!part) return false;
  if (verdict.quota_group < 0 || verdict.quota_group >= (int)part->groups.size())
    return false;
  const auto& grp = part->groups[verdict.quota_group];
  long long quota = (long long)w.k * popcount(grp.voters) / p.n;
  if ((long long)popcount(grp.candidates) < quota) quota = popcount(grp.candidates);
  return popcount(w.members & grp.candidates) < quota;
}

}  // namespace

bool revalidate_witness(const ApprovalProfile& p, const Committee& w,
                        const AxiomVerdict& verdict) {
  if (verdict.satisfied) return true;  // nothing to certify
  switch (verdict.axiom) {
    case Axiom::JR:
    case Axiom::PJR:
    case Axiom::EJR:
      return verdict.cohesive &&
             revalidate_cohesive(p, w, verdict.axiom, *verdict.cohesive);
    case Axiom::CJR:
    case Axiom::StrictCore:
      return verdict.blocking &&
             revalidate_blocking(p, w, verdict.axiom, *verdict.blocking);
    case Axiom::Quota:
      return revalidate_quota(p, w, verdict);
  }
  return false;
}

}  // namespace abc
