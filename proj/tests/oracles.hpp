#pragma once

// Test-only oracles, independent of the library's search/optimization paths:
// definition-level axiom checks that enumerate every voter subset, and a plain
// enumerate-all-committees PAV optimizer. Deliberately written in the most
// naive way that can be read off the definitions.

#include "abcvote/axioms.hpp"
#include "abcvote/rational.hpp"

namespace abc::oracle {

inline int isect_size(const ApprovalProfile& p, Mask x) {
  Mask common = full_mask(p.m);
  for (Mask v = x; v; v &= v - 1) common &= p.ballots[lowest_bit(v)];
  return popcount(common);
}

inline Mask approval_union(const ApprovalProfile& p, Mask x) {
  Mask u = 0;
  for (Mask v = x; v; v &= v - 1) u |= p.ballots[lowest_bit(v)];
  return u;
}

inline bool naive_jr(const ApprovalProfile& p, const Committee& w) {
  for (Mask x = 1; x < (Mask{1} << p.n); ++x) {
    if ((long long)w.k * popcount(x) < p.n) continue;
    if (isect_size(p, x) < 1) continue;
    if (popcount(w.members & approval_union(p, x)) < 1) return false;
  }
  return true;
}

inline bool naive_pjr(const ApprovalProfile& p, const Committee& w) {
  for (int ell = 1; ell <= w.k; ++ell)
    for (Mask x = 1; x < (Mask{1} << p.n); ++x) {
      if ((long long)w.k * popcount(x) < (long long)ell * p.n) continue;
      if (isect_size(p, x) < ell) continue;
      if (popcount(w.members & approval_union(p, x)) < ell) return false;
    }
  return true;
}

inline bool naive_ejr(const ApprovalProfile& p, const Committee& w) {
  for (int ell = 1; ell <= w.k; ++ell)
    for (Mask x = 1; x < (Mask{1} << p.n); ++x) {
      if ((long long)w.k * popcount(x) < (long long)ell * p.n) continue;
      if (isect_size(p, x) < ell) continue;
      bool some = false;
      for (Mask v = x; v && !some; v &= v - 1)
        some = popcount(w.members & p.ballots[lowest_bit(v)]) >= ell;
      if (!some) return false;
    }
  return true;
}

inline bool naive_cjr(const ApprovalProfile& p, const Committee& w) {
  for (Mask d = 1; d < (Mask{1} << p.m); ++d) {
    const int ell = popcount(d);
    if (ell > w.k) continue;
    for (Mask x = 1; x < (Mask{1} << p.n); ++x) {
      if ((long long)w.k * popcount(x) < (long long)ell * p.n) continue;
      bool all_strict = true;
      for (Mask v = x; v && all_strict; v &= v - 1) {
        Mask b = p.ballots[lowest_bit(v)];
        all_strict = popcount(b & d) > popcount(b & w.members);
      }
      if (all_strict) return false;
    }
  }
  return true;
}

inline bool naive_strict_core(const ApprovalProfile& p, const Committee& w) {
  for (Mask d = 1; d < (Mask{1} << p.m); ++d) {
    const int ell = popcount(d);
    if (ell > w.k) continue;
    for (Mask x = 1; x < (Mask{1} << p.n); ++x) {
      if ((long long)w.k * popcount(x) < (long long)ell * p.n) continue;
      bool all_weak = true, some_strict = false;
      for (Mask v = x; v && all_weak; v &= v - 1) {
        Mask b = p.ballots[lowest_bit(v)];
        int in_d = popcount(b & d), in_w = popcount(b & w.members);
        all_weak = in_d >= in_w;
        some_strict |= in_d > in_w;
      }
      if (all_weak && some_strict) return false;
    }
  }
  return true;
}

struct BrutePav {
  Mask best_committee = 0;  // lexicographically smallest optimum
  Rational best_score = -1;
  std::uint64_t optima = 0;
};

// Plain enumeration over all C(m,k) committees with exact rationals.
inline BrutePav brute_pav(const ApprovalProfile& p, int k) {
  BrutePav out;
  for_each_subset(p.m, k, [&](Mask members) {
    Rational score = 0;
    for (Mask b : p.ballots) score += harmonic(popcount(b & members));
    if (score > out.best_score) {
      out.best_score = score;
      out.best_committee = members;
      out.optima = 1;
    } else if (score == out.best_score) {
      ++out.optima;
    }
    return true;
  });
  return out;
}

}  // namespace abc::oracle
