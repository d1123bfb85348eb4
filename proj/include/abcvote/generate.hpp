#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "abcvote/profile.hpp"

namespace abc {

// Each voter approves each candidate independently with probability p
// (quantized to 53 bits so the draw is integer-exact and platform-stable).
// Same seed, same profile, everywhere.
ApprovalProfile generate_random(int n, int m, double p, std::uint64_t seed);

// Polarized generator: groups[i] = (group size, |C_G|); candidate blocks are
// laid out consecutively from index 0.
ApprovalProfile generate_polarized(const std::vector<std::pair<int, int>>& groups);

// Streams every (profile, k) with 1 <= n <= n_max, 1 <= m <= m_max, every
// ballot vector, and 1 <= k <= min(k_max, m). Total order: n ascending, then
// m ascending, then ballot code ascending (mixed radix base 2^m, voter 0 the
// least significant digit), then k ascending. Restartable via skip_to().
class InstanceEnumerator {
 public:
  InstanceEnumerator(int n_max, int m_max, int k_max);

  // Advances to the next instance; returns false when exhausted. The profile
  // reference stays valid and is overwritten by the next call.
  bool next(const ApprovalProfile*& profile, int& k);

  // Closed-form stream length: sum over (n, m) of (2^m)^n * min(k_max, m).
  std::uint64_t total_count() const;

  std::uint64_t index() const { return index_; }  // instances already yielded
  void skip_to(std::uint64_t index);

 private:
  bool advance_profile();

  int n_max_, m_max_, k_max_;
  int n_ = 1, m_ = 1, k_ = 0;
  std::uint64_t code_ = 0;
  bool fresh_ = true, done_ = false;
  std::uint64_t index_ = 0;
  ApprovalProfile profile_;
};

}  // namespace abc
