#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcvote/bits.hpp"

namespace abc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable after construction; safe to share across workers.
struct ApprovalProfile {
  int n = 0;  // voters
  int m = 0;  // candidates
  std::vector<Mask> ballots;  // ballots[i] subset of [0, m)

  bool valid() const {
    if (n < 1 || m < 1 || m > kMaxBits || (int)ballots.size() != n) return false;
    for (Mask b : ballots)
      if (b & ~full_mask(m)) return false;
    return true;
  }
};

struct Committee {
  Mask members = 0;
  int k = 0;

  bool valid_for(const ApprovalProfile& p) const {
    return k >= 1 && k <= p.m && popcount(members) == k &&
           (members & ~full_mask(p.m)) == 0;
  }
};

struct PolarizedGroup {
  Mask voters = 0;      // G
  Mask candidates = 0;  // C_G
};

struct PolarizedPartition {
  std::vector<PolarizedGroup> groups;  // ordered by smallest voter index
  Mask abstainers = 0;                 // voters with empty ballots; in no group
};

// Profile file format:
//   line 1: "m k"
//   one line per voter: strictly increasing candidate indices, or "-" for an
//   empty ballot; '#' starts a comment line; blank lines are skipped.
// n is inferred from the number of ballot lines.
struct ParsedInstance {
  ApprovalProfile profile;
  int k = 0;
};

ParsedInstance parse_profile(std::istream& in);
ParsedInstance parse_profile(const std::string& text);
ParsedInstance load_profile(const std::string& path);

// Canonical form: indices ascending, single spaces, trailing newline per line.
std::string serialize_profile(const ApprovalProfile& p, int k);

// Unique partition when identical-ballot groups have pairwise disjoint
// candidate sets; empty-ballot voters never join a group and never block.
std::optional<PolarizedPartition> is_polarized(const ApprovalProfile& p);

}  // namespace abc
