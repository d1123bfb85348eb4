#include "abcvote/profile.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace abc {

namespace {

bool content_line(const std::string& line, std::string& out) {
  std::string s = line;
  if (!s.empty() && s.back() == '\r') s.pop_back();
  size_t i = s.find_first_not_of(" \t");
  if (i == std::string::npos) return false;
  if (s[i] == '#') return false;
  out = s;
  return true;
}

}  // namespace

ParsedInstance parse_profile(std::istream& in) {
  std::string line, s;
  bool have_header = false;
  int m = 0, k = 0;
  std::vector<Mask> ballots;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line, s)) continue;
    std::istringstream ls(s);
    if (!have_header) {
      if (!(ls >> m >> k)) throw ParseError("line " + std::to_string(lineno) + ": expected header \"m k\"");
      std::string rest;
      if (ls >> rest) throw ParseError("header has trailing tokens");
      if (m < 1 || m > kMaxBits) throw ParseError("candidate count m out of range [1, 64]");
      if (k < 1) throw ParseError("committee size k must be positive");
      if (k > m) throw ParseError("committee size k exceeds candidate count m");
      have_header = true;
      continue;
    }
    Mask b = 0;
    std::string tok;
    ls >> tok;
    if (tok == "-") {
      std::string rest;
      if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": tokens after \"-\"");
      ballots.push_back(0);
      continue;
    }
    int prev = -1;
    do {
      size_t pos = 0;
      int c;
      try {
        c = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad token \"" + tok + "\"");
      }
      if (pos != tok.size()) throw ParseError("line " + std::to_string(lineno) + ": bad token \"" + tok + "\"");
      if (c < 0 || c >= m) throw ParseError("line " + std::to_string(lineno) + ": candidate index " + std::to_string(c) + " out of range [0, " + std::to_string(m) + ")");
      if (c == prev) throw ParseError("line " + std::to_string(lineno) + ": duplicate candidate index " + std::to_string(c));
      if (c < prev) throw ParseError("line " + std::to_string(lineno) + ": indices must be strictly increasing");
      prev = c;
      b |= Mask{1} << c;
    } while (ls >> tok);
    ballots.push_back(b);
  }
  if (!have_header) throw ParseError("empty input: missing header");
  if (ballots.empty()) throw ParseError("no ballot lines");
  if ((int)ballots.size() > kMaxBits) throw ParseError("voter count exceeds 64");
  ParsedInstance out;
  out.profile.n = (int)ballots.size();
  out.profile.m = m;
  out.profile.ballots = std::move(ballots);
  out.k = k;
  return out;
}

ParsedInstance parse_profile(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

ParsedInstance load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_profile(in);
}

std::string serialize_profile(const ApprovalProfile& p, int k) {
  std::ostringstream out;
  out << p.m << ' ' << k << '\n';
  for (Mask b : p.ballots) {
    if (!b) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (int c : mask_to_indices(b)) {
      if (!first) out << ' ';
      out << c;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::optional<PolarizedPartition> is_polarized(const ApprovalProfile& p) {
  // Group identical nonempty ballots, keyed by smallest voter index.
  std::map<Mask, Mask> by_ballot;  // ballot -> voter set
  PolarizedPartition part;
  for (int i = 0; i < p.n; ++i) {
    if (p.ballots[i] == 0) {
      part.abstainers |= Mask{1} << i;
      continue;
    }
    by_ballot[p.ballots[i]] |= Mask{1} << i;
  }
  Mask seen = 0;
  for (const auto& [ballot, voters] : by_ballot) {
    if (ballot & seen) return std::nullopt;  // groups overlap in candidates
    seen |= ballot;
    part.groups.push_back({voters, ballot});
  }
  std::sort(part.groups.begin(), part.groups.end(),
            [](const PolarizedGroup& a, const PolarizedGroup& b) {
              return lowest_bit(a.voters) < lowest_bit(b.voters);
            });
  return part;
}

}  // namespace abc
