#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "abcvote/json_io.hpp"

namespace {

using namespace abc;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Committee parse_committee_list(const std::string& list, const ApprovalProfile& p) {
  std::istringstream in(list);
  std::string tok;
  Mask members = 0;
  int prev = -1, count = 0;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int c = std::stoi(tok, &pos);
    if (pos != tok.size()) throw ParseError("bad committee token \"" + tok + "\"");
    if (c < 0 || c >= p.m) throw ParseError("committee index " + std::to_string(c) + " out of range");
    if (c == prev) throw ParseError("duplicate committee index " + std::to_string(c));
    if (c < prev) throw ParseError("committee indices must be ascending");
    prev = c;
    members |= Mask{1} << c;
    ++count;
  }
  if (count == 0) throw ParseError("empty committee list");
  return Committee{members, count};
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string committee_str(Mask members) {
  std::string s = "{";
  bool first = true;
  for (int c : mask_to_indices(members)) {
    if (!first) s += ", ";
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

int cmd_compute(const std::string& rule_s, const std::string& input, int k_override,
                bool want_trace, bool json, std::uint64_t budget) {
  auto rule = rule_from_name(rule_s);
  if (!rule) throw ParseError("unknown rule " + rule_s);
  ParsedInstance pi = load_profile(input);
  int k = k_override > 0 ? k_override : pi.k;
  if (k > pi.profile.m) throw ParseError("--k exceeds m");
  RuleResult r = run_rule(*rule, pi.profile, k, nullptr, budget);
  Rational score = pav_score(pi.profile, r.committee);
  if (json) {
    Json j = rule_result_json(pi.profile, r, score);
    if (!want_trace) j.erase("trace");
    print_json(j);
  } else {
    std::cout << rule_s << ": W=" << committee_str(r.committee.members)
              << "  pav score " << rational_str(score) << '\n';
    if (want_trace) {
      for (size_t i = 0; i < r.trace.rounds.size(); ++i) {
        const auto& tr = r.trace.rounds[i];
        std::cout << "  round " << i + 1 << ": "
                  << (tr.swapped_out >= 0
                          ? "swap " + std::to_string(tr.swapped_out) + " -> " + std::to_string(tr.chosen)
                          : (r.trace.rule == "revseqpav" ? "delete " : "choose ") + std::to_string(tr.chosen))
                  << "  quantity " << rational_str(tr.quantity);
        if (tr.filler) std::cout << "  [filler]";
        if (tr.tied.size() > 1) {
          std::cout << "  tied";
          for (int t : tr.tied) std::cout << ' ' << t;
        }
        std::cout << '\n';
      }
      if (r.trace.optimal_score)
        std::cout << "  optima: " << r.trace.optima_count << ", nodes: " << r.trace.nodes << '\n';
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& axiom_s, const std::string& input,
              const std::string& committee_s, int ell, bool json,
              std::uint64_t budget) {
  auto axiom = axiom_from_name(axiom_s);
  if (!axiom) throw ParseError("unknown axiom " + axiom_s);
  ParsedInstance pi = load_profile(input);
  Committee w = parse_committee_list(committee_s, pi.profile);
  if (w.k != pi.k)
    throw ParseError("committee size " + std::to_string(w.k) +
                     " does not match k=" + std::to_string(pi.k));
  std::optional<int> ell_opt;
  if (ell > 0) ell_opt = ell;
  AxiomVerdict v = check_axiom(*axiom, pi.profile, w, ell_opt, budget);
  if (json) {
    print_json(verdict_json(v));
  } else if (v.satisfied) {
    std::cout << axiom_s << ": satisfied\n";
  } else {
    std::cout << axiom_s << ": VIOLATED";
    if (v.cohesive)
      std::cout << "  X=" << committee_str(v.cohesive->voters)
                << " ell=" << v.cohesive->ell
                << " common=" << committee_str(v.cohesive->common);
    if (v.blocking)
      std::cout << "  X=" << committee_str(v.blocking->voters)
                << " ell=" << v.blocking->ell
                << " D=" << committee_str(v.blocking->deviating);
    if (v.quota_group >= 0) std::cout << "  group=" << v.quota_group;
    std::cout << '\n';
  }
  return v.satisfied ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& rule_s, const std::string& axiom_s, int n_max,
               int m_max, int k_max, int threads, bool json) {
  auto rule = rule_from_name(rule_s);
  auto axiom = axiom_from_name(axiom_s);
  if (!rule) throw ParseError("unknown rule " + rule_s);
  if (!axiom) throw ParseError("unknown axiom " + axiom_s);
  SearchReport rep = exhaustive_verify(*rule, *axiom, n_max, m_max, k_max, threads);
  if (json)
    print_json(report_json(rep));
  else
    std::cout << "verify " << rule_s << " vs " << axiom_s << ": "
              << rep.instances << " instances, " << rep.skipped << " skipped, "
              << rep.violations.size() << " violations\n";
  std::cerr << "wall: " << rep.wall_seconds << " s\n";
  return rep.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_search(const std::string& mode, const std::string& rule_s,
               const std::string& axiom_s, int n_max, int m_max, int k_max,
               std::uint64_t samples, std::uint64_t seed, double p_approve,
               int n_lo, int m_lo, int k_lo, bool json) {
  if (mode == "violation") {
    auto rule = rule_from_name(rule_s);
    auto axiom = axiom_from_name(axiom_s);
    if (!rule) throw ParseError("--rule required for violation search");
    if (!axiom) throw ParseError("--axiom required for violation search");
    std::optional<Violation> v;
    std::uint64_t examined = 0;
    if (samples > 0) {
      SamplerParams sp;
      sp.n_lo = n_lo; sp.n_hi = n_max;
      sp.m_lo = m_lo; sp.m_hi = m_max;
      sp.k_lo = k_lo; sp.k_hi = k_max;
      sp.p = p_approve;
      v = find_violation_random(*rule, *axiom, sp, samples, seed, &examined);
    } else {
      v = find_violation_exhaustive(*rule, *axiom, n_max, m_max, k_max);
    }
    if (!v) {
      if (json) {
        Json j;
        j["found"] = false;
        j["examined"] = examined;
        print_json(j);
      } else {
        std::cout << "no violation found\n";
      }
      return kExitOk;
    }
    if (json) {
      Json j;
      j["found"] = true;
      j["profile"] = profile_json(v->profile);
      j["k"] = v->k;
      j["committee"] = committee_json(v->committee.members);
      j["verdict"] = verdict_json(v->verdict);
      print_json(j);
    } else {
      std::cout << "violation found:\n"
                << serialize_profile(v->profile, v->k)
                << "committee " << committee_str(v->committee.members) << '\n';
    }
    return kExitViolation;
  }
  if (mode == "emptystrictcore") {
    auto found = find_empty_strict_core(n_max, m_max, k_max);
    if (!found) {
      std::cout << "no empty-strict-core instance within bounds\n";
      return kExitOk;
    }
    if (json) {
      Json j;
      j["found"] = true;
      j["profile"] = profile_json(found->profile);
      j["k"] = found->k;
      Json blocked = Json::array();
      for (const auto& [w, verdict] : found->blocked) {
        Json b;
        b["committee"] = committee_json(w.members);
        b["verdict"] = verdict_json(verdict);
        blocked.push_back(std::move(b));
      }
      j["blocked"] = std::move(blocked);
      print_json(j);
    } else {
      std::cout << "empty strict core instance (every committee blocked):\n"
                << serialize_profile(found->profile, found->k);
    }
    return kExitViolation;
  }
  if (mode == "cjrscan") {
    CjrScanReport rep = cjr_existence_scan(n_max, m_max, k_max);
    if (json) {
      Json j;
      j["note"] = "empirical exploration of an open question";
      j["instances"] = rep.instances;
      j["cjr_empty"] = rep.cjr_empty;
      if (rep.first_empty_profile) {
        j["first_empty_profile"] = profile_json(*rep.first_empty_profile);
        j["first_empty_k"] = rep.first_empty_k;
      }
      print_json(j);
    } else {
      std::cout << "cjr existence scan (empirical exploration of an open question): "
                << rep.instances << " instances, " << rep.cjr_empty
                << " without any CJR committee\n";
    }
    std::cerr << "wall: " << rep.wall_seconds << " s\n";
    return kExitOk;
  }
  if (mode == "committee-mono") {
    auto rule = rule_from_name(rule_s);
    if (!rule) throw ParseError("--rule required for committee-mono search");
    auto br = find_committee_mono_break(*rule, n_max, m_max, k_max);
    if (!br) {
      std::cout << "no committee-monotonicity break within bounds\n";
      return kExitOk;
    }
    if (json) {
      Json j;
      j["found"] = true;
      j["profile"] = profile_json(br->profile);
      j["k"] = br->k;
      j["committee"] = committee_json(br->committee);
      print_json(j);
    } else {
      std::cout << "committee-monotonicity break at k=" << br->k << ":\n"
                << serialize_profile(br->profile, br->k)
                << "outcome " << committee_str(br->committee)
                << " has no extension at k+1\n";
    }
    return kExitViolation;
  }
  if (mode == "candidate-mono") {
    auto rule = rule_from_name(rule_s);
    if (!rule) throw ParseError("--rule required for candidate-mono search");
    auto br = find_candidate_mono_break(*rule, n_max, m_max, k_max);
    if (!br) {
      std::cout << "no candidate-monotonicity break within bounds\n";
      return kExitOk;
    }
    if (json) {
      Json j;
      j["found"] = true;
      j["profile"] = profile_json(br->modified);
      j["voter"] = br->voter;
      j["candidate"] = br->candidate;
      j["before"] = committee_json(br->before);
      j["after"] = committee_json(br->after);
      print_json(j);
    } else {
      std::cout << "candidate-monotonicity break: adding approval of candidate "
                << br->candidate << " by voter " << br->voter
                << " ejects it: " << committee_str(br->before) << " -> "
                << committee_str(br->after) << '\n';
    }
    return kExitViolation;
  }
  throw ParseError("unknown search mode " + mode);
}

int cmd_gen(const std::string& model, int n, int m, int k, double p,
            const std::string& groups_spec, std::uint64_t seed, bool have_seed) {
  ApprovalProfile prof;
  if (model == "random") {
    if (!have_seed) throw ParseError("gen --model random requires --seed");
    prof = generate_random(n, m, p, seed);
  } else if (model == "polarized") {
    // SPEC format: comma-separated "groupsize:candidates" pairs
    if (groups_spec.empty()) throw ParseError("gen --model polarized requires --groups");
    std::vector<std::pair<int, int>> groups;
    std::istringstream in(groups_spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw ParseError("bad group spec \"" + tok + "\"");
      groups.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    prof = generate_polarized(groups);
  } else {
    throw ParseError("unknown model " + model);
  }
  if (k < 1 || k > prof.m) throw ParseError("k must be in [1, m]");
  std::cout << serialize_profile(prof, k);
  return kExitOk;
}

int cmd_score(const std::string& input, const std::string& committee_s) {
  ParsedInstance pi = load_profile(input);
  Committee w = parse_committee_list(committee_s, pi.profile);
  std::cout << rational_str(pav_score(pi.profile, w)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approval-based committee voting: proportional rules, justified-"
               "representation checkers, and claim-verification searches"};
  app.require_subcommand(1);

  std::string rule_s, axiom_s, input, committee_s, mode, model = "random", groups_spec;
  int k_override = 0, ell = 0, n_max = 3, m_max = 3, k_max = 3, threads = 1;
  int n = 0, m = 0, k = 0, n_lo = 1, m_lo = 1, k_lo = 1;
  double p_approve = 0.5;
  std::uint64_t samples = 0, seed = 0, budget = abc::kDefaultNodeBudget;
  bool json = false, want_trace = false;

  auto* compute = app.add_subcommand("compute", "run a committee rule on a profile");
  compute->add_option("--rule", rule_s, "gspav|seqpav|revseqpav|pav|phragmen|lspav")->required();
  compute->add_option("--input", input, "profile file")->required();
  compute->add_option("--k", k_override, "override the k embedded in the file");
  compute->add_option("--budget", budget, "node budget for pav");
  compute->add_flag("--trace", want_trace, "print the selection trace");
  compute->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "check an axiom for a given committee");
  check->add_option("--axiom", axiom_s, "jr|pjr|ejr|cjr|strictcore|quota")->required();
  check->add_option("--input", input)->required();
  check->add_option("--committee", committee_s, "comma-separated ascending indices")->required();
  check->add_option("--ell", ell, "check a single cohesion level");
  check->add_option("--budget", budget, "work budget for the coNP checkers");
  check->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "exhaustively verify rule-vs-axiom over all bounded instances");
  verify->add_option("--rule", rule_s)->required();
  verify->add_option("--axiom", axiom_s)->required();
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--m-max", m_max)->required();
  verify->add_option("--k-max", k_max)->required();
  verify->add_option("--threads", threads);
  verify->add_flag("--json", json);

  auto* search = app.add_subcommand("search", "hunt for witnesses and counterexamples");
  search->add_option("--mode", mode, "violation|emptystrictcore|cjrscan|committee-mono|candidate-mono")->required();
  search->add_option("--rule", rule_s);
  search->add_option("--axiom", axiom_s);
  search->add_option("--n-max", n_max);
  search->add_option("--m-max", m_max);
  search->add_option("--k-max", k_max);
  search->add_option("--n-lo", n_lo);
  search->add_option("--m-lo", m_lo);
  search->add_option("--k-lo", k_lo);
  search->add_option("--samples", samples, "random samples (0 = exhaustive)");
  search->add_option("--seed", seed);
  search->add_option("--p", p_approve, "approval probability for the sampler");
  search->add_option("--budget", budget);
  search->add_flag("--json", json);

  auto* gen = app.add_subcommand("gen", "generate a profile file on stdout");
  gen->add_option("--model", model, "random|polarized");
  gen->add_option("--n", n);
  gen->add_option("--m", m);
  gen->add_option("--k", k)->required();
  gen->add_option("--p", p_approve);
  gen->add_option("--groups", groups_spec, "polarized spec: size:cands,size:cands,...");
  auto* seed_opt = gen->add_option("--seed", seed);

  auto* score = app.add_subcommand("score", "exact PAV score of a committee");
  score->add_option("--input", input)->required();
  score->add_option("--committee", committee_s)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(rule_s, input, k_override, want_trace, json, budget);
    if (check->parsed())
      return cmd_check(axiom_s, input, committee_s, ell, json, budget);
    if (verify->parsed())
      return cmd_verify(rule_s, axiom_s, n_max, m_max, k_max, threads, json);
    if (search->parsed())
      return cmd_search(mode, rule_s, axiom_s, n_max, m_max, k_max, samples,
                        seed, p_approve, n_lo, m_lo, k_lo, json);
    if (gen->parsed())
      return cmd_gen(model, n, m, k, p_approve, groups_spec, seed, seed_opt->count() > 0);
    if (score->parsed()) return cmd_score(input, committee_s);
  } catch (const abc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
