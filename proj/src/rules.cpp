#include "abcvote/rules.hpp"

#include <algorithm>
#include <array>

namespace abc {

namespace {

void require_instance(const ApprovalProfile& p, int k) {
  if (!p.valid()) throw std::invalid_argument("invalid profile");
  if (k < 1 || k > p.m) throw std::invalid_argument("k must be in [1, m]");
}

// Rule inner loops carry harmonic quantities as integers scaled by lcm(1..m).
struct Scaled {
  Wide scale;
  std::array<Wide, kMaxBits + 1> inv;  // inv[j] = scale / j

  explicit Scaled(int m) : scale(harmonic_scale(m)) {
    inv[0] = 0;
    for (int j = 1; j <= m; ++j) inv[j] = scale / j;
  }
  Rational to_rational(Wide v) const { return make_rational(v, scale); }
};

std::vector<Mask> approver_masks(const ApprovalProfile& p) {
  std::vector<Mask> ap(p.m, 0);
  for (int i = 0; i < p.n; ++i)
    for (Mask b = p.ballots[i]; b; b &= b - 1)
      ap[lowest_bit(b)] |= Mask{1} << i;
  return ap;
}

int rank_of(TieOrder order, int c) { return order ? (*order)[c] : c; }

}  // namespace

Rational pav_score(const ApprovalProfile& profile, const Committee& committee) {
  if (!profile.valid() || !committee.valid_for(profile))
    throw std::invalid_argument("pav_score: committee invalid for profile");
  Rational total = 0;
  for (Mask b : profile.ballots) total += harmonic(popcount(b & committee.members));
  return total;
}

RuleResult seqpav(const ApprovalProfile& profile, int k, TieOrder order) {
  require_instance(profile, k);
  const Scaled sc(profile.m);
  const auto approvers = approver_masks(profile);
  std::array<int, kMaxBits> cnt{};
  Mask w = 0;
  RuleResult out;
  out.trace.rule = "seqpav";
  for (int round = 0; round < k; ++round) {
    Wide best = -1;
    int chosen = -1;
    for (int c = 0; c < profile.m; ++c) {
      if (has_bit(w, c)) continue;
      Wide gain = 0;
      for (Mask a = approvers[c]; a; a &= a - 1) gain += sc.inv[cnt[lowest_bit(a)] + 1];
      if (gain > best || (gain == best && rank_of(order, c) < rank_of(order, chosen))) {
        best = gain;
        chosen = c;
      }
    }
    TraceRound tr;
    tr.chosen = chosen;
    tr.quantity = sc.to_rational(best);
    tr.filler = (best == 0);
    for (int c = 0; c < profile.m; ++c) {
      if (has_bit(w, c)) continue;
      Wide gain = 0;
      for (Mask a = approvers[c]; a; a &= a - 1) gain += sc.inv[cnt[lowest_bit(a)] + 1];
      if (gain == best) tr.tied.push_back(c);
    }
    out.trace.rounds.push_back(std::move(tr));
    w |= Mask{1} << chosen;
    for (Mask a = approvers[chosen]; a; a &= a - 1) ++cnt[lowest_bit(a)];
  }
  out.committee = {w, k};
  return out;
}

RuleResult revseqpav(const ApprovalProfile& profile, int k, TieOrder order) {
  require_instance(profile, k);
  const Scaled sc(profile.m);
  const auto approvers = approver_masks(profile);
  std::array<int, kMaxBits> cnt{};
  for (int i = 0; i < profile.n; ++i) cnt[i] = popcount(profile.ballots[i]);
  Mask w = full_mask(profile.m);
  RuleResult out;
  out.trace.rule = "revseqpav";
  for (int round = 0; round < profile.m - k; ++round) {
    Wide best = -1;
    int chosen = -1;
    for (int c = 0; c < profile.m; ++c) {
      if (!has_bit(w, c)) continue;
      Wide drop = 0;
      for (Mask a = approvers[c]; a; a &= a - 1) drop += sc.inv[cnt[lowest_bit(a)]];
      if (best < 0 || drop < best ||
          (drop == best && rank_of(order, c) < rank_of(order, chosen))) {
        best = drop;
        chosen = c;
      }
    }
    TraceRound tr;
    tr.chosen = chosen;  // the deleted candidate
    tr.quantity = sc.to_rational(best);
    for (int c = 0; c < profile.m; ++c) {
      if (!has_bit(w, c)) continue;
      Wide drop = 0;
      for (Mask a = approvers[c]; a; a &= a - 1) drop += sc.inv[cnt[lowest_bit(a)]];
      if (drop == best) tr.tied.push_back(c);
    }
    out.trace.rounds.push_back(std::move(tr));
    w &= ~(Mask{1} << chosen);
    for (Mask a = approvers[chosen]; a; a &= a - 1) --cnt[lowest_bit(a)];
  }
  out.committee = {w, k};
  return out;
}

RuleResult gspav(const ApprovalProfile& profile, int k) {
  require_instance(profile, k);
  auto part = is_polarized(profile);
  if (!part)
    throw std::invalid_argument(
        "gspav: profile is not polarized; use seqpav/pav/phragmen instead");
  const auto& groups = part->groups;
  const int g = (int)groups.size();
  std::vector<long long> size(g), reps(g, 0);
  for (int i = 0; i < g; ++i) size[i] = popcount(groups[i].voters);
  Mask w = 0;
  RuleResult out;
  out.trace.rule = "gspav";
  for (int round = 0; round < k; ++round) {
    // largest |G| / (r(G)+1) among groups with an unselected approved candidate
    int pick = -1;
    for (int i = 0; i < g; ++i) {
      if (!(groups[i].candidates & ~w)) continue;
      if (pick < 0 || size[i] * (reps[pick] + 1) > size[pick] * (reps[i] + 1)) pick = i;
    }
    TraceRound tr;
    if (pick < 0) {
      tr.chosen = lowest_bit(~w & full_mask(profile.m));
      tr.quantity = 0;
      tr.filler = true;
    } else {
      tr.chosen = lowest_bit(groups[pick].candidates & ~w);
      tr.quantity = Rational(size[pick], reps[pick] + 1);
      for (int i = 0; i < g; ++i)
        if ((groups[i].candidates & ~w) &&
            size[i] * (reps[pick] + 1) == size[pick] * (reps[i] + 1))
          tr.tied.push_back(i);
      ++reps[pick];
    }
    w |= Mask{1} << tr.chosen;
    tr.group_reps.assign(reps.begin(), reps.end());
    out.trace.rounds.push_back(std::move(tr));
  }
  out.committee = {w, k};
  return out;
}

RuleResult seq_phragmen(const ApprovalProfile& profile, int k,
                        bool fill_unapprovable, TieOrder order) {
  require_instance(profile, k);
  const auto approvers = approver_masks(profile);
  std::vector<Rational> load(profile.n, 0);
  Mask w = 0;
  RuleResult out;
  out.trace.rule = "phragmen";
  for (int round = 0; round < k; ++round) {
    // electing c costs one unit of load, spread so all approvers of c end at
    // s(c) = (1 + sum of their current loads) / |approvers(c)|
    int chosen = -1;
    Rational best;
    std::vector<std::pair<int, Rational>> scores;
    for (int c = 0; c < profile.m; ++c) {
      if (has_bit(w, c) || !approvers[c]) continue;
      Rational s = 1;
      for (Mask a = approvers[c]; a; a &= a - 1) s += load[lowest_bit(a)];
      s /= popcount(approvers[c]);
      scores.emplace_back(c, s);
      if (chosen < 0 || s < best ||
          (s == best && rank_of(order, c) < rank_of(order, chosen))) {
        chosen = c;
        best = s;
      }
    }
    TraceRound tr;
    if (chosen < 0) {
      if (!fill_unapprovable)
        throw std::runtime_error(
            "seq_phragmen: no candidate with approvers left and filling disabled");
      tr.chosen = lowest_bit(~w & full_mask(profile.m));
      tr.quantity = 0;
      tr.filler = true;
    } else {
      tr.chosen = chosen;
      tr.quantity = best;
      for (const auto& [c, s] : scores)
        if (s == best) tr.tied.push_back(c);
      for (Mask a = approvers[chosen]; a; a &= a - 1) load[lowest_bit(a)] = best;
    }
    w |= Mask{1} << tr.chosen;
    tr.loads = load;
    out.trace.rounds.push_back(std::move(tr));
  }
  out.committee = {w, k};
  return out;
}

RuleResult ls_pav(const ApprovalProfile& profile, int k, TieOrder order) {
  require_instance(profile, k);
  const Scaled sc(profile.m);
  const auto approvers = approver_masks(profile);
  Mask w = seqpav(profile, k, order).committee.members;
  std::array<int, kMaxBits> cnt{};
  for (int i = 0; i < profile.n; ++i) cnt[i] = popcount(profile.ballots[i] & w);

  // scan order: by tie order when given, else by index
  std::vector<int> cand(profile.m);
  for (int c = 0; c < profile.m; ++c) cand[c] = c;
  if (order)
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return (*order)[a] < (*order)[b]; });

  RuleResult out;
  out.trace.rule = "lspav";
  const Wide threshold_lhs_factor = (Wide)k * k;  // accept swap iff delta*k^2 >= n*scale
  for (;;) {
    bool improved = false;
    for (int w_out : cand) {
      if (!has_bit(w, w_out)) continue;
      for (int c_in : cand) {
        if (has_bit(w, c_in)) continue;
        Wide delta = 0;
        for (Mask a = approvers[c_in] & ~approvers[w_out]; a; a &= a - 1)
          delta += sc.inv[cnt[lowest_bit(a)] + 1];
        for (Mask a = approvers[w_out] & ~approvers[c_in]; a; a &= a - 1)
          delta -= sc.inv[cnt[lowest_bit(a)]];
        if (delta * threshold_lhs_factor >= (Wide)profile.n * sc.scale) {
          TraceRound tr;
          tr.chosen = c_in;
          tr.swapped_out = w_out;
          tr.quantity = sc.to_rational(delta);
          out.trace.rounds.push_back(std::move(tr));
          w = (w & ~(Mask{1} << w_out)) | (Mask{1} << c_in);
          for (Mask a = approvers[w_out]; a; a &= a - 1) --cnt[lowest_bit(a)];
          for (Mask a = approvers[c_in]; a; a &= a - 1) ++cnt[lowest_bit(a)];
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  out.committee = {w, k};
  return out;
}

namespace {

// Include-first DFS in candidate index order visits committees in
// lexicographic member-set order, so the first optimum kept is the
// lexicographically smallest. Pruning is strict (bound < best) so that
// co-optimal leaves are never cut and the optimum count stays exact.
struct PavSearch {
  const ApprovalProfile& p;
  int k;
  Scaled sc;
  std::vector<Mask> approvers;
  std::array<int, kMaxBits> cnt{};
  Mask cur = 0;
  Wide score = 0;
  Wide best = -1;
  Mask best_committee = 0;
  std::uint64_t optima = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  std::vector<Mask>* collect = nullptr;

  PavSearch(const ApprovalProfile& prof, int kk, std::uint64_t node_budget)
      : p(prof), k(kk), sc(prof.m), approvers(approver_masks(prof)), budget(node_budget) {}

  Wide gain(int c) const {
    Wide g = 0;
    for (Mask a = approvers[c]; a; a &= a - 1) g += sc.inv[cnt[lowest_bit(a)] + 1];
    return g;
  }

  void dfs(int pos, int chosen) {
    if (++nodes > budget)
      throw BudgetExceeded("pav_exact: node budget exhausted");
    if (chosen == k) {
      if (score > best) {
        best = score;
        best_committee = cur;
        optima = 1;
        if (collect) {
          collect->clear();
          collect->push_back(cur);
        }
      } else if (score == best) {
        ++optima;
        if (collect) collect->push_back(cur);
      }
      return;
    }
    const int need = k - chosen;
    if (p.m - pos < need) return;
    // admissible bound: marginal gains only shrink as the committee grows,
    // so the top `need` single-add gains over-estimate any completion
    std::array<Wide, kMaxBits> g{};
    int r = 0;
    for (int c = pos; c < p.m; ++c) g[r++] = gain(c);
    std::nth_element(g.begin(), g.begin() + (need - 1), g.begin() + r,
                     std::greater<Wide>());
    Wide ub = score;
    for (int i = 0; i < need; ++i) ub += g[i];
    if (best >= 0 && ub < best) return;

    // include pos
    const Wide g0 = gain(pos);
    cur |= Mask{1} << pos;
    score += g0;
    for (Mask a = approvers[pos]; a; a &= a - 1) ++cnt[lowest_bit(a)];
    dfs(pos + 1, chosen + 1);
    for (Mask a = approvers[pos]; a; a &= a - 1) --cnt[lowest_bit(a)];
    score -= g0;
    cur &= ~(Mask{1} << pos);
    // exclude pos
    dfs(pos + 1, chosen);
  }
};

}  // namespace

PavExactResult pav_exact(const ApprovalProfile& profile, int k,
                         std::uint64_t node_budget) {
  require_instance(profile, k);
  PavSearch s(profile, k, node_budget);
  s.dfs(0, 0);
  PavExactResult out;
  out.committee = {s.best_committee, k};
  out.score = s.sc.to_rational(s.best);
  out.trace.rule = "pav";
  out.trace.optimal_score = out.score;
  out.trace.optima_count = s.optima;
  out.trace.nodes = s.nodes;
  return out;
}

std::vector<Mask> pav_all_optima(const ApprovalProfile& profile, int k,
                                 std::uint64_t node_budget) {
  require_instance(profile, k);
  PavSearch s(profile, k, node_budget);
  std::vector<Mask> optima;
  s.collect = &optima;
  s.dfs(0, 0);
  return optima;
}

}  // namespace abc
