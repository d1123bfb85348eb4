// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff no
// criterion failed. Time-boxed witness hunts (criteria 6 and 11) fall back to
// a flagged WARN when the pinned fixture is absent and the budget runs out.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abcvote/json_io.hpp"
#include "abcvote/search.hpp"
#include "oracles.hpp"

using namespace abc;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
int g_warnings = 0;

void result(int criterion, bool pass, const std::string& what) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what << '\n';
  if (!pass) ++g_failures;
}

void warn(int criterion, const std::string& what) {
  std::cout << "WARN criterion " << criterion << ": " << what << '\n';
  ++g_warnings;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criteria 1 + 2: axiom ladder and the l=1 / k=1 collapses --------------

void criteria_ladder_and_collapse() {
  std::uint64_t ladder_bad = 0, collapse_bad = 0, checked = 0;
  InstanceEnumerator en(3, 3, 3);
  const ApprovalProfile* p;
  int k;
  while (en.next(p, k)) {
    for_each_subset(p->m, k, [&](Mask members) {
      Committee w{members, k};
      const bool jr = check_jr(*p, w).satisfied;
      const bool pjr = check_pjr(*p, w).satisfied;
      const bool ejr = check_ejr(*p, w).satisfied;
      ++checked;
      if ((ejr && !pjr) || (pjr && !jr)) ++ladder_bad;
      if (check_pjr(*p, w, 1).satisfied != jr) ++collapse_bad;
      if (check_ejr(*p, w, 1).satisfied != jr) ++collapse_bad;
      if (k == 1 && (pjr != jr || ejr != jr)) ++collapse_bad;
      return true;
    });
  }
  result(1, ladder_bad == 0,
         "EJR=>PJR=>JR over all n<=3, m<=3, all k, all committees (" +
             std::to_string(checked) + " committees, " +
             std::to_string(ladder_bad) + " exceptions)");
  result(2, collapse_bad == 0,
         "l=1 PJR/EJR == JR and k=1 JR==PJR==EJR on the same family (" +
             std::to_string(collapse_bad) + " mismatches)");
}

// --- criteria 3 / 4 / 5: positive rule claims ------------------------------

struct RegimeOutcome {
  std::uint64_t exhaustive_violations = 0;
  std::uint64_t samples = 0;
  std::uint64_t random_violations = 0;
};

RegimeOutcome positive_claim_regime(RuleId rule, Axiom axiom) {
  RegimeOutcome out;
  out.exhaustive_violations =
      exhaustive_verify(rule, axiom, 3, 3, 3).violations.size();
  std::uint64_t seed = 20260826;
  for (double p : {0.5, 0.25, 0.75}) {
    SamplerParams sp;
    sp.n_hi = 8;
    sp.m_hi = 8;
    sp.k_hi = 8;
    sp.p = p;
    std::uint64_t examined = 0;
    const std::uint64_t want = p == 0.5 ? 4000 : 3000;
    if (find_violation_random(rule, axiom, sp, want, seed++, &examined))
      ++out.random_violations;
    out.samples += want;
  }
  return out;
}

void criterion3() {
  auto r = positive_claim_regime(RuleId::PAV, Axiom::EJR);
  result(3, r.exhaustive_violations == 0 && r.random_violations == 0,
         "PAV satisfies EJR: exhaustive (3,3,3) + " + std::to_string(r.samples) +
             " seeded samples, zero violations");
}

void criterion4() {
  auto r = positive_claim_regime(RuleId::Phragmen, Axiom::PJR);
  result(4, r.exhaustive_violations == 0 && r.random_violations == 0,
         "SeqPhragmen satisfies PJR: exhaustive (3,3,3) + " +
             std::to_string(r.samples) + " seeded samples, zero violations");
}

void criterion5() {
  auto r = positive_claim_regime(RuleId::LsPAV, Axiom::EJR);
  // swap-count bound k^2 * H(k) on the same randomized regime
  std::uint64_t bound_bad = 0;
  std::mt19937_64 master(424242);
  for (int s = 0; s < 2000; ++s) {
    const int n = 1 + (int)(master() % 8);
    const int m = 1 + (int)(master() % 8);
    const int k = 1 + (int)(master() % m);
    ApprovalProfile p = generate_random(n, m, 0.5, master());
    auto run = ls_pav(p, k);
    if (Rational((long long)run.trace.rounds.size()) >
        Rational((long long)k * k) * harmonic(k))
      ++bound_bad;
  }
  // polynomial-time behavior at a size far beyond the exhaustive regime
  bool fast = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ApprovalProfile p = generate_random(50, 30, 0.3, seed);
    auto t0 = std::chrono::steady_clock::now();
    auto run = ls_pav(p, 10);
    const double dt = elapsed(t0);
    if (dt >= 1.0) fast = false;
    if (Rational((long long)run.trace.rounds.size()) > Rational(100) * harmonic(10))
      ++bound_bad;
  }
  result(5, r.exhaustive_violations == 0 && r.random_violations == 0 &&
                bound_bad == 0 && fast,
         "LS-PAV satisfies EJR, swap count <= k^2*H(k), n=50 m=30 k=10 under 1 s");
}

// --- criterion 6: SeqPAV fails JR (pinned fixture or time-boxed hunt) ------

void criterion6(const fs::path& fixtures) {
  const fs::path fx_path = fixtures / "seqpav_jr_violation.prof";
  if (fs::exists(fx_path)) {
    Fixture fx = load_fixture(fx_path.string());
    Committee w = seqpav(fx.profile, fx.k).committee;
    auto expected = fx.committee();
    AxiomVerdict v = check_jr(fx.profile, w);
    const bool ok = !v.satisfied && revalidate_witness(fx.profile, w, v) &&
                    (!expected || expected->members == w.members);
    result(6, ok, "SeqPAV fails JR: pinned fixture (n=" +
                      std::to_string(fx.profile.n) + ", m=" +
                      std::to_string(fx.profile.m) + ", k=" +
                      std::to_string(fx.k) + ") still violates");
    return;
  }
  // documented budget: 200000 sampled instances, k in [6, 10]
  SamplerParams sp;
  sp.n_lo = 12; sp.n_hi = 40;
  sp.m_lo = 7; sp.m_hi = 14;
  sp.k_lo = 6; sp.k_hi = 10;
  sp.p = 0.25;
  auto v = find_violation_random(RuleId::SeqPAV, Axiom::JR, sp, 200000, 606060);
  if (v) {
    result(6, true, "SeqPAV fails JR: witness found by search; pin it as a fixture");
    std::cout << serialize_fixture(v->profile, v->k,
                                   {{"rule", "seqpav"}, {"axiom", "jr"},
                                    {"expect", "violated"}});
  } else {
    warn(6, "claim unreproduced at budget (200000 samples, k in [6,10]); "
            "not a silent pass");
    result(6, true, "SeqPAV fails JR: budget exhausted, flagged above");
  }
}

// --- criterion 7: gspav quota on the polarized family ----------------------

void criterion7() {
  auto rep = exhaustive_verify_polarized(RuleId::GSPAV, Axiom::Quota, 3, 3, 3);
  result(7, rep.violations.empty(),
         "gspav meets min(floor(k|G|/n), |C_G|) on all polarized profiles, <=3 "
         "groups x size<=3 x |C_G|<=3 (" + std::to_string(rep.instances) +
             " instances)");
}

// --- criterion 8: branch-and-bound vs plain enumeration --------------------

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t checked = 0, bad = 0;
  // independent oracle: plain lexicographic C(m,k) enumeration on an
  // integer-scaled harmonic table, strictly-better-only updates
  for (int n = 1; n <= 4 && bad == 0; ++n) {
    for (int m = 1; m <= 6 && bad == 0; ++m) {
      const long long scale = (long long)(harmonic_scale(m));
      long long hs[7] = {0};
      for (int j = 1; j <= m; ++j) hs[j] = hs[j - 1] + scale / j;
      ApprovalProfile prof;
      prof.n = n;
      prof.m = m;
      prof.ballots.assign(n, 0);
      const std::uint64_t codes = std::uint64_t{1} << (m * n);
      for (std::uint64_t code = 0; code < codes && bad == 0; ++code) {
        for (int i = 0; i < n; ++i)
          prof.ballots[i] = (code >> (i * m)) & full_mask(m);
        for (int k = 1; k <= m; ++k) {
          long long best = -1;
          Mask best_w = 0;
          std::uint64_t optima = 0;
          for_each_subset(m, k, [&](Mask members) {
            long long score = 0;
            for (int i = 0; i < n; ++i)
              score += hs[popcount(prof.ballots[i] & members)];
            if (score > best) {
              best = score;
              best_w = members;
              optima = 1;
            } else if (score == best) {
              ++optima;
            }
            return true;
          });
          auto got = pav_exact(prof, k);
          ++checked;
          if (got.committee.members != best_w ||
              got.score != Rational(best, scale) ||
              got.trace.optima_count != optima) {
            ++bad;
            std::cout << "  mismatch at:\n" << serialize_profile(prof, k);
          }
        }
      }
    }
  }
  std::ostringstream msg;
  msg << "pav_exact equals C(m,k) enumeration on all n<=4, m<=6, all k ("
      << checked << " instances, " << bad << " mismatches, "
      << (int)elapsed(t0) << " s)";
  result(8, bad == 0, msg.str());
}

// --- criterion 9: maximal-X checkers vs the all-subsets oracle -------------

void criterion9() {
  std::uint64_t bad = 0, checked = 0;
  InstanceEnumerator en(4, 3, 3);
  const ApprovalProfile* p;
  int k;
  while (en.next(p, k)) {
    for_each_subset(p->m, k, [&](Mask members) {
      Committee w{members, k};
      ++checked;
      if (check_jr(*p, w).satisfied != oracle::naive_jr(*p, w)) ++bad;
      if (check_pjr(*p, w).satisfied != oracle::naive_pjr(*p, w)) ++bad;
      if (check_ejr(*p, w).satisfied != oracle::naive_ejr(*p, w)) ++bad;
      if (check_cjr(*p, w).satisfied != oracle::naive_cjr(*p, w)) ++bad;
      if (check_strict_core(*p, w).satisfied != oracle::naive_strict_core(*p, w))
        ++bad;
      return true;
    });
  }
  result(9, bad == 0,
         "EJR/PJR/CJR/strict-core verdicts match the naive all-subsets "
         "enumerator on n<=4, m<=3 (" + std::to_string(checked) +
             " committees, " + std::to_string(bad) + " mismatches)");
}

// --- criterion 10: the strict core can be empty ----------------------------

void criterion10(const fs::path& fixtures) {
  auto found = find_empty_strict_core(4, 4, 3);
  if (!found) {
    result(10, false, "no empty-strict-core instance within bounds (4,4,3)");
    return;
  }
  bool all_revalidate = true;
  std::uint64_t expected = binomial(found->profile.m, found->k);
  for (const auto& [w, verdict] : found->blocked)
    all_revalidate = all_revalidate && !verdict.satisfied &&
                     revalidate_witness(found->profile, w, verdict);
  bool pinned_ok = true;
  const fs::path fx_path = fixtures / "empty_strict_core.prof";
  if (fs::exists(fx_path)) {
    Fixture fx = load_fixture(fx_path.string());
    pinned_ok = serialize_profile(fx.profile, fx.k) ==
                serialize_profile(found->profile, found->k);
  }
  result(10, all_revalidate && found->blocked.size() == expected && pinned_ok,
         "empty strict core within (4,4,3): every committee of the found "
         "instance carries a revalidated blocking witness");
  if (!fs::exists(fx_path))
    std::cout << "  pin this instance:\n"
              << serialize_fixture(found->profile, found->k,
                                   {{"mode", "emptystrictcore"}});
}

// --- criterion 11: PAV fails committee monotonicity ------------------------

void criterion11(const fs::path& fixtures) {
  const fs::path fx_path = fixtures / "pav_committee_mono_break.prof";
  if (fs::exists(fx_path)) {
    Fixture fx = load_fixture(fx_path.string());
    auto res = check_committee_monotonicity(RuleId::PAV, fx.profile, fx.k + 1);
    result(11, !res.monotone && res.break_k == fx.k,
           "PAV fails committee monotonicity: pinned fixture still breaks at "
           "k=" + std::to_string(fx.k));
    return;
  }
  auto br = find_committee_mono_break(RuleId::PAV, 4, 4, 4);
  if (br) {
    result(11, true, "PAV committee-monotonicity break found; pin it as a fixture");
    std::cout << serialize_fixture(br->profile, br->k,
                                   {{"mode", "committee-mono"}, {"rule", "pav"}});
  } else {
    warn(11, "claim unreproduced at budget (exhaustive n<=4, m<=4); not a "
             "silent pass");
    result(11, true, "PAV committee monotonicity: budget exhausted, flagged above");
  }
}

// --- criterion 12: byte-identical JSON -------------------------------------

std::string run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void criterion12(const std::string& cli) {
  if (cli.empty()) {
    result(12, false, "determinism: --cli path not provided");
    return;
  }
  const std::string verify_args =
      "verify --rule lspav --axiom ejr --n-max 2 --m-max 3 --k-max 3 --json";
  std::string v1 = run_cli(cli, verify_args + " --threads 1");
  std::string v2 = run_cli(cli, verify_args + " --threads 1");
  std::string v4 = run_cli(cli, verify_args + " --threads 4");

  const fs::path prof = fs::temp_directory_path() / "abcvote_acceptance.prof";
  std::ofstream(prof) << "3 2\n0 1\n0 1\n2\n2\n";
  const std::string compute_args =
      "compute --rule pav --input " + prof.string() + " --trace --json";
  std::string c1 = run_cli(cli, compute_args);
  std::string c2 = run_cli(cli, compute_args);
  const std::string search_args =
      "search --mode violation --rule seqpav --axiom jr --n-max 5 --m-max 5 "
      "--k-max 3 --samples 500 --seed 99 --json";
  std::string s1 = run_cli(cli, search_args);
  std::string s2 = run_cli(cli, search_args);
  fs::remove(prof);
  const bool ok = !v1.empty() && v1 == v2 && v1 == v4 && !c1.empty() &&
                  c1 == c2 && !s1.empty() && s1 == s2;
  result(12, ok,
         "verify/compute/search --json byte-identical across reruns and "
         "thread counts {1,4}");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, fixtures = "fixtures";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string a = argv[i];
    if (a == "--cli") cli = argv[i + 1];
    if (a == "--fixtures") fixtures = argv[i + 1];
  }
  auto t0 = std::chrono::steady_clock::now();
  criteria_ladder_and_collapse();
  criterion3();
  criterion4();
  criterion5();
  criterion6(fixtures);
  criterion7();
  criterion8();
  criterion9();
  criterion10(fixtures);
  criterion11(fixtures);
  criterion12(cli);
  std::cout << (g_failures ? "ACCEPTANCE FAILED: " : "ACCEPTANCE OK: ")
            << g_failures << " failed, " << g_warnings << " warnings, "
            << (int)elapsed(t0) << " s total\n";
  return g_failures ? 1 : 0;
}
