#include "abcvote/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace abc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::GSPAV: return "gspav";
    case RuleId::SeqPAV: return "seqpav";
    case RuleId::RevSeqPAV: return "revseqpav";
    case RuleId::PAV: return "pav";
    case RuleId::Phragmen: return "phragmen";
    case RuleId::LsPAV: return "lspav";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  if (name == "gspav") return RuleId::GSPAV;
  if (name == "seqpav") return RuleId::SeqPAV;
  if (name == "revseqpav") return RuleId::RevSeqPAV;
  if (name == "pav") return RuleId::PAV;
  if (name == "phragmen") return RuleId::Phragmen;
  if (name == "lspav") return RuleId::LsPAV;
  return std::nullopt;
}

RuleResult run_rule(RuleId rule, const ApprovalProfile& p, int k, TieOrder order,
                    std::uint64_t node_budget) {
  switch (rule) {
    case RuleId::GSPAV: return gspav(p, k);
    case RuleId::SeqPAV: return seqpav(p, k, order);
    case RuleId::RevSeqPAV: return revseqpav(p, k, order);
    case RuleId::PAV: {
      auto r = pav_exact(p, k, node_budget);
      return {r.committee, std::move(r.trace)};
    }
    case RuleId::Phragmen: return seq_phragmen(p, k, true, order);
    case RuleId::LsPAV: return ls_pav(p, k, order);
  }
  throw std::invalid_argument("unknown rule");
}

namespace {

// One instance of the verify loop. Returns true iff a violation was recorded.
bool verify_instance(RuleId rule, Axiom axiom, const ApprovalProfile& p, int k,
                     std::uint64_t index, SearchReport& rep) {
  if ((rule == RuleId::GSPAV || axiom == Axiom::Quota) && !is_polarized(p)) {
    ++rep.skipped;
    return false;
  }
  ++rep.instances;
  Committee w = run_rule(rule, p, k).committee;
  AxiomVerdict v = check_axiom(axiom, p, w);
  if (v.satisfied) return false;
  if (!revalidate_witness(p, w, v))
    throw std::logic_error("internal: witness failed revalidation");
  rep.violations.push_back({p, k, w, std::move(v), index});
  return true;
}

SearchReport verify_range(RuleId rule, Axiom axiom, int n_max, int m_max,
                          int k_max, std::uint64_t begin, std::uint64_t end,
                          std::uint64_t max_violations) {
  SearchReport rep;
  InstanceEnumerator en(n_max, m_max, k_max);
  en.skip_to(begin);
  const ApprovalProfile* p;
  int k;
  while (en.index() < end && en.next(p, k)) {
    verify_instance(rule, axiom, *p, k, en.index() - 1, rep);
    if (rep.violations.size() >= max_violations) {
      rep.complete = false;
      rep.checkpoint = en.index();
      break;
    }
  }
  return rep;
}

}  // namespace

SearchReport exhaustive_verify(RuleId rule, Axiom axiom, int n_max, int m_max,
                               int k_max, int threads,
                               std::uint64_t max_violations,
                               std::uint64_t start_index) {
  auto t0 = std::chrono::steady_clock::now();
  InstanceEnumerator en(n_max, m_max, k_max);
  const std::uint64_t total = en.total_count();
  SearchReport rep;
  rep.mode = "exhaustive";
  rep.rule = rule_name(rule);
  rep.axiom = axiom_name(axiom);
  rep.n_max = n_max;
  rep.m_max = m_max;
  rep.k_max = k_max;
  rep.expected_total = total;

  threads = std::max(1, threads);
  if (threads == 1 || total - start_index < 1000) {
    SearchReport part = verify_range(rule, axiom, n_max, m_max, k_max,
                                     start_index, total, max_violations);
    rep.instances = part.instances;
    rep.skipped = part.skipped;
    rep.violations = std::move(part.violations);
    rep.complete = part.complete;
    rep.checkpoint = part.checkpoint;
  } else {
    // contiguous ranges; merge by instance index so the report is identical
    // for every thread count
    std::vector<SearchReport> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t span = total - start_index;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t b = start_index + span * t / threads;
      std::uint64_t e = start_index + span * (t + 1) / threads;
      pool.emplace_back([&, t, b, e] {
        parts[t] = verify_range(rule, axiom, n_max, m_max, k_max, b, e,
                                max_violations);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) {
      rep.instances += part.instances;
      rep.skipped += part.skipped;
      for (auto& v : part.violations) rep.violations.push_back(std::move(v));
      rep.complete = rep.complete && part.complete;
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                return a.instance_index < b.instance_index;
              });
    if (rep.violations.size() > max_violations) {
      rep.violations.resize(max_violations);
      rep.complete = false;
    }
    if (!rep.complete && !rep.violations.empty())
      rep.checkpoint = rep.violations.back().instance_index + 1;
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

SearchReport exhaustive_verify_polarized(RuleId rule, Axiom axiom,
                                         int max_groups, int max_group_size,
                                         int max_cands_per_group) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.mode = "exhaustive";
  rep.rule = rule_name(rule);
  rep.axiom = axiom_name(axiom);
  std::uint64_t index = 0;
  // ordered group-shape tuples: (|G_1|, |C_1|), ..., (|G_g|, |C_g|)
  std::vector<std::pair<int, int>> shape;
  auto recurse = [&](auto&& self, int groups_left) -> void {
    if (!shape.empty()) {
      ApprovalProfile prof = generate_polarized(shape);
      for (int k = 1; k <= prof.m; ++k)
        verify_instance(rule, axiom, prof, k, index++, rep);
    }
    if (groups_left == 0) return;
    for (int gs = 1; gs <= max_group_size; ++gs)
      for (int cs = 1; cs <= max_cands_per_group; ++cs) {
        shape.emplace_back(gs, cs);
        self(self, groups_left - 1);
        shape.pop_back();
      }
  };
  recurse(recurse, max_groups);
  rep.expected_total = index;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

std::optional<Violation> find_violation_random(RuleId rule, Axiom axiom,
                                               const SamplerParams& sampler,
                                               std::uint64_t samples,
                                               std::uint64_t seed,
                                               std::uint64_t* examined) {
  if (sampler.n_lo < 1 || sampler.n_hi > kMaxBits || sampler.n_lo > sampler.n_hi ||
      sampler.m_lo < 1 || sampler.m_hi > kMaxBits || sampler.m_lo > sampler.m_hi ||
      sampler.k_lo < 1 || sampler.k_lo > sampler.k_hi)
    throw std::invalid_argument("find_violation_random: bad sampler bounds");
  std::mt19937_64 master(seed);
  std::uint64_t done = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const int n = sampler.n_lo + (int)(master() % (sampler.n_hi - sampler.n_lo + 1));
    const int m = sampler.m_lo + (int)(master() % (sampler.m_hi - sampler.m_lo + 1));
    const std::uint64_t sub_seed = master();
    const int k_hi = std::min(sampler.k_hi, m);
    if (sampler.k_lo > k_hi) continue;
    const int k = sampler.k_lo + (int)(master() % (k_hi - sampler.k_lo + 1));
    ApprovalProfile p = generate_random(n, m, sampler.p, sub_seed);
    if ((rule == RuleId::GSPAV || axiom == Axiom::Quota) && !is_polarized(p)) continue;
    ++done;
    Committee w = run_rule(rule, p, k).committee;
    AxiomVerdict v = check_axiom(axiom, p, w);
    if (!v.satisfied) {
      if (!revalidate_witness(p, w, v))
        throw std::logic_error("internal: witness failed revalidation");
      if (examined) *examined = done;
      return Violation{std::move(p), k, w, std::move(v), s};
    }
  }
  if (examined) *examined = done;
  return std::nullopt;
}

std::optional<Violation> find_violation_exhaustive(RuleId rule, Axiom axiom,
                                                   int n_max, int m_max, int k_max) {
  SearchReport rep = exhaustive_verify(rule, axiom, n_max, m_max, k_max, 1, 1);
  if (rep.violations.empty()) return std::nullopt;
  return std::move(rep.violations.front());
}

std::optional<EmptyCoreInstance> find_empty_strict_core(int n_max, int m_max,
                                                        int k_max) {
  InstanceEnumerator en(n_max, m_max, k_max);
  const ApprovalProfile* p;
  int k;
  std::uint64_t scanned = 0;
  while (en.next(p, k)) {
    ++scanned;
    std::vector<std::pair<Committee, AxiomVerdict>> blocked;
    bool all_blocked = true;
    for_each_subset(p->m, k, [&](Mask members) {
      Committee w{members, k};
      AxiomVerdict v = check_strict_core(*p, w);
      if (v.satisfied) {
        all_blocked = false;
        return false;
      }
      blocked.emplace_back(w, std::move(v));
      return true;
    });
    if (all_blocked) {
      EmptyCoreInstance out;
      out.profile = *p;
      out.k = k;
      out.blocked = std::move(blocked);
      out.instances_scanned = scanned;
      return out;
    }
  }
  return std::nullopt;
}

CjrScanReport cjr_existence_scan(int n_max, int m_max, int k_max) {
  auto t0 = std::chrono::steady_clock::now();
  CjrScanReport rep;
  InstanceEnumerator en(n_max, m_max, k_max);
  const ApprovalProfile* p;
  int k;
  while (en.next(p, k)) {
    ++rep.instances;
    bool exists = false;
    for_each_subset(p->m, k, [&](Mask members) {
      if (check_cjr(*p, Committee{members, k}).satisfied) {
        exists = true;
        return false;
      }
      return true;
    });
    if (!exists) {
      ++rep.cjr_empty;
      if (!rep.first_empty_profile) {
        rep.first_empty_profile = *p;
        rep.first_empty_k = k;
      }
    }
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

std::vector<Mask> outcome_set(RuleId rule, const ApprovalProfile& p, int k,
                              bool* resolute_only) {
  if (resolute_only) *resolute_only = false;
  if (rule == RuleId::PAV) return pav_all_optima(p, k);
  if (rule == RuleId::GSPAV || p.m > 6) {
    if (resolute_only) *resolute_only = true;
    return {run_rule(rule, p, k).committee.members};
  }
  std::set<Mask> outcomes;
  std::vector<int> perm(p.m);
  for (int c = 0; c < p.m; ++c) perm[c] = c;
  std::vector<int> priority(p.m);
  do {
    for (int r = 0; r < p.m; ++r) priority[perm[r]] = r;
    outcomes.insert(run_rule(rule, p, k, &priority).committee.members);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {outcomes.begin(), outcomes.end()};
}

CommitteeMonoResult check_committee_monotonicity(RuleId rule,
                                                 const ApprovalProfile& p,
                                                 int k_max) {
  if (k_max > p.m) throw std::invalid_argument("k_max exceeds m");
  CommitteeMonoResult res;
  for (int k = 1; k + 1 <= k_max; ++k) {
    bool resolute = false;
    auto lo = outcome_set(rule, p, k, &resolute);
    auto hi = outcome_set(rule, p, k + 1, &resolute);
    res.resolute_only = res.resolute_only || resolute;
    for (Mask w : lo) {
      bool extends = std::any_of(hi.begin(), hi.end(),
                                 [&](Mask w2) { return (w & w2) == w; });
      if (!extends) {
        res.monotone = false;
        res.break_k = k;
        res.break_committee = w;
        return res;
      }
    }
  }
  return res;
}

std::optional<CommitteeMonoBreak> find_committee_mono_break(RuleId rule,
                                                            int n_max, int m_max,
                                                            int k_max) {
  InstanceEnumerator en(n_max, m_max, 1);  // one k per profile; we sweep k ourselves
  const ApprovalProfile* p;
  int k;
  std::uint64_t scanned = 0;
  while (en.next(p, k)) {
    ++scanned;
    if (p->m < 2) continue;
    auto res = check_committee_monotonicity(rule, *p, std::min(k_max, p->m));
    if (!res.monotone)
      return CommitteeMonoBreak{*p, res.break_k, res.break_committee, scanned};
  }
  return std::nullopt;
}

std::optional<CandidateMonoBreak> check_candidate_monotonicity(
    RuleId rule, const ApprovalProfile& p, int k) {
  const Mask before = run_rule(rule, p, k).committee.members;
  for (Mask wb = before; wb; wb &= wb - 1) {
    const int c = lowest_bit(wb);
    for (int i = 0; i < p.n; ++i) {
      if (has_bit(p.ballots[i], c)) continue;
      ApprovalProfile mod = p;
      mod.ballots[i] |= Mask{1} << c;
      if (rule == RuleId::GSPAV && !is_polarized(mod)) continue;
      const Mask after = run_rule(rule, mod, k).committee.members;
      if (!has_bit(after, c))
        return CandidateMonoBreak{std::move(mod), i, c, before, after};
    }
  }
  return std::nullopt;
}

std::optional<CandidateMonoBreak> find_candidate_mono_break(
    RuleId rule, int n_max, int m_max, int k_max,
    std::uint64_t* instances_scanned) {
  InstanceEnumerator en(n_max, m_max, k_max);
  const ApprovalProfile* p;
  int k;
  std::uint64_t scanned = 0;
  while (en.next(p, k)) {
    ++scanned;
    if (rule == RuleId::GSPAV && !is_polarized(*p)) continue;
    auto br = check_candidate_monotonicity(rule, *p, k);
    if (br) {
      if (instances_scanned) *instances_scanned = scanned;
      return br;
    }
  }
  if (instances_scanned) *instances_scanned = scanned;
  return std::nullopt;
}

std::optional<Committee> Fixture::committee() const {
  auto it = directives.find("committee");
  if (it == directives.end()) return std::nullopt;
  std::istringstream in(it->second);
  Mask members = 0;
  int c;
  while (in >> c) members |= Mask{1} << c;
  return Committee{members, popcount(members)};
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream plain;
  Fixture fx;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#!", 0) == 0) {
      std::istringstream ls(line.substr(2));
      std::string key;
      ls >> key;
      std::string rest;
      std::getline(ls, rest);
      const size_t start = rest.find_first_not_of(' ');
      fx.directives[key] = start == std::string::npos ? "" : rest.substr(start);
    } else {
      plain << line << '\n';
    }
  }
  ParsedInstance pi = parse_profile(plain.str());
  fx.profile = std::move(pi.profile);
  fx.k = pi.k;
  return fx;
}

std::string serialize_fixture(const ApprovalProfile& p, int k,
                              const std::map<std::string, std::string>& directives) {
  std::ostringstream out;
  for (const auto& [key, value] : directives)
    out << "#! " << key << (value.empty() ? "" : " " + value) << '\n';
  out << serialize_profile(p, k);
  return out.str();
}

}  // namespace abc
