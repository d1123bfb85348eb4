#include "abcvote/axioms.hpp"

#include "abcvote/rules.hpp"  // BudgetExceeded

namespace abc {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::JR: return "jr";
    case Axiom::PJR: return "pjr";
    case Axiom::EJR: return "ejr";
    case Axiom::CJR: return "cjr";
    case Axiom::StrictCore: return "strictcore";
    case Axiom::Quota: return "quota";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  if (name == "jr") return Axiom::JR;
  if (name == "pjr") return Axiom::PJR;
  if (name == "ejr") return Axiom::EJR;
  if (name == "cjr") return Axiom::CJR;
  if (name == "strictcore") return Axiom::StrictCore;
  if (name == "quota") return Axiom::Quota;
  return std::nullopt;
}

namespace {

void require_committee(const ApprovalProfile& p, const Committee& w) {
  if (!p.valid() || !w.valid_for(p))
    throw std::invalid_argument("axiom check: committee invalid for profile");
}

struct EllRange {
  int lo, hi;
};

EllRange ell_range(std::optional<int> ell, int k) {
  if (!ell) return {1, k};
  if (*ell < 1 || *ell > k)
    throw std::invalid_argument("ell must be in [1, k]");
  return {*ell, *ell};
}

}  // namespace

AxiomVerdict check_jr(const ApprovalProfile& p, const Committee& w) {
  require_committee(p, w);
  AxiomVerdict v{Axiom::JR};
  v.ell_lo = v.ell_hi = 1;
  // A violating group's voters all approve some common c and nothing in W;
  // the maximal such group per candidate loses no violation.
  for (int c = 0; c < p.m; ++c) {
    Mask x = 0;
    for (int i = 0; i < p.n; ++i)
      if (has_bit(p.ballots[i], c) && !(p.ballots[i] & w.members))
        x |= Mask{1} << i;
    ++v.sets_examined;
    if ((long long)w.k * popcount(x) >= p.n) {
      v.satisfied = false;
      v.cohesive = CohesiveWitness{x, 1, Mask{1} << c};
      return v;
    }
  }
  return v;
}

AxiomVerdict check_pjr(const ApprovalProfile& p, const Committee& w,
                       std::optional<int> ell, std::uint64_t budget) {
  require_committee(p, w);
  auto [lo, hi] = ell_range(ell, w.k);
  AxiomVerdict v{Axiom::PJR};
  v.ell_lo = lo;
  v.ell_hi = hi;
  const auto w_members = mask_to_indices(w.members);
  for (int l = lo; l <= hi && v.satisfied; ++l) {
    for_each_subset(p.m, l, [&](Mask t) {
      Mask xt = 0;
      for (int i = 0; i < p.n; ++i)
        if ((p.ballots[i] & t) == t) xt |= Mask{1} << i;
      if (++v.sets_examined > budget)
        throw BudgetExceeded("check_pjr: work budget exhausted");
      if ((long long)w.k * popcount(xt) < (long long)l * p.n) return true;
      // A violating subgroup's ballots meet W inside some S with |S| < l;
      // taking X maximal per (T, S) is lossless.
      for (int s_size = 0; s_size < l && v.satisfied; ++s_size) {
        for_each_subset(w.k, s_size, [&](Mask s_small) {
          Mask s = 0;
          for (Mask b = s_small; b; b &= b - 1) s |= Mask{1} << w_members[lowest_bit(b)];
          Mask x = 0;
          for (Mask vs = xt; vs; vs &= vs - 1) {
            int i = lowest_bit(vs);
            if ((p.ballots[i] & w.members & ~s) == 0) x |= Mask{1} << i;
          }
          if (++v.sets_examined > budget)
            throw BudgetExceeded("check_pjr: work budget exhausted");
          if ((long long)w.k * popcount(x) >= (long long)l * p.n) {
            v.satisfied = false;
            v.cohesive = CohesiveWitness{x, l, t};
            return false;
          }
          return true;
        });
      }
      return v.satisfied;
    });
  }
  return v;
}

AxiomVerdict check_ejr(const ApprovalProfile& p, const Committee& w,
                       std::optional<int> ell, std::uint64_t budget) {
  require_committee(p, w);
  auto [lo, hi] = ell_range(ell, w.k);
  AxiomVerdict v{Axiom::EJR};
  v.ell_lo = lo;
  v.ell_hi = hi;
  for (int l = lo; l <= hi && v.satisfied; ++l) {
    for_each_subset(p.m, l, [&](Mask t) {
      Mask x = 0;
      for (int i = 0; i < p.n; ++i)
        if ((p.ballots[i] & t) == t && popcount(p.ballots[i] & w.members) < l)
          x |= Mask{1} << i;
      if (++v.sets_examined > budget)
        throw BudgetExceeded("check_ejr: work budget exhausted");
      if ((long long)w.k * popcount(x) >= (long long)l * p.n) {
        v.satisfied = false;
        v.cohesive = CohesiveWitness{x, l, t};
        return false;
      }
      return true;
    });
  }
  return v;
}

AxiomVerdict check_cjr(const ApprovalProfile& p, const Committee& w,
                       std::uint64_t budget) {
  require_committee(p, w);
  AxiomVerdict v{Axiom::CJR};
  v.ell_lo = 1;
  v.ell_hi = w.k;
  for (int l = 1; l <= w.k && v.satisfied; ++l) {
    for_each_subset(p.m, l, [&](Mask d) {
      Mask x = 0;
      for (int i = 0; i < p.n; ++i)
        if (popcount(p.ballots[i] & d) > popcount(p.ballots[i] & w.members))
          x |= Mask{1} << i;
      if (++v.sets_examined > budget)
        throw BudgetExceeded("check_cjr: work budget exhausted");
      if ((long long)w.k * popcount(x) >= (long long)l * p.n) {
        v.satisfied = false;
        v.blocking = BlockingWitness{x, l, d, x};
        return false;
      }
      return true;
    });
  }
  return v;
}

AxiomVerdict check_strict_core(const ApprovalProfile& p, const Committee& w,
                               std::uint64_t budget) {
  require_committee(p, w);
  AxiomVerdict v{Axiom::StrictCore};
  v.ell_lo = 1;
  v.ell_hi = w.k;
  for (int l = 1; l <= w.k && v.satisfied; ++l) {
    for_each_subset(p.m, l, [&](Mask d) {
      Mask weak = 0, strict = 0;
      for (int i = 0; i < p.n; ++i) {
        int in_d = popcount(p.ballots[i] & d);
        int in_w = popcount(p.ballots[i] & w.members);
        if (in_d >= in_w) weak |= Mask{1} << i;
        if (in_d > in_w) strict |= Mask{1} << i;
      }
      if (++v.sets_examined > budget)
        throw BudgetExceeded("check_strict_core: work budget exhausted");
      if (strict && (long long)w.k * popcount(weak) >= (long long)l * p.n) {
        v.satisfied = false;
        v.blocking = BlockingWitness{weak, l, d, strict};
        return false;
      }
      return true;
    });
  }
  return v;
}

AxiomVerdict check_polarized_quota(const ApprovalProfile& p, const Committee& w) {
  require_committee(p, w);
  auto part = is_polarized(p);
  if (!part) throw std::invalid_argument("check_polarized_quota: profile is not polarized");
  AxiomVerdict v{Axiom::Quota};
  for (int g = 0; g < (int)part->groups.size(); ++g) {
    const auto& grp = part->groups[g];
    long long quota = std::min<long long>(
        (long long)w.k * popcount(grp.voters) / p.n, popcount(grp.candidates));
    ++v.sets_examined;
    if (popcount(w.members & grp.candidates) < quota) {
      v.satisfied = false;
      v.quota_group = g;
      v.cohesive = CohesiveWitness{grp.voters, (int)quota, grp.candidates};
      return v;
    }
  }
  return v;
}

AxiomVerdict check_axiom(Axiom a, const ApprovalProfile& p, const Committee& w,
                         std::optional<int> ell, std::uint64_t budget) {
  switch (a) {
    case Axiom::JR: return check_jr(p, w);
    case Axiom::PJR: return check_pjr(p, w, ell, budget);
    case Axiom::EJR: return check_ejr(p, w, ell, budget);
    case Axiom::CJR: return check_cjr(p, w, budget);
    case Axiom::StrictCore: return check_strict_core(p, w, budget);
    case Axiom::Quota: return check_polarized_quota(p, w);
  }
  throw std::invalid_argument("unknown axiom");
}

}  // namespace abc
