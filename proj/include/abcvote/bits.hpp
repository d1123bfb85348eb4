#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace abc {

// Candidate and voter sets are 64-bit masks; the library caps both n and m at 64.
using Mask = std::uint64_t;

constexpr int kMaxBits = 64;

inline int popcount(Mask s) { return std::popcount(s); }

inline Mask full_mask(int bits) {
  return bits >= 64 ? ~Mask{0} : (Mask{1} << bits) - 1;
}

inline bool has_bit(Mask s, int i) { return (s >> i) & 1u; }

inline int lowest_bit(Mask s) { return std::countr_zero(s); }

inline std::vector<int> mask_to_indices(Mask s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
  Mask s = 0;
  for (int i : idx) s |= Mask{1} << i;
  return s;
}

// Calls fn(mask) for every size-r subset of {0..m-1} in lexicographic order
// of the ascending index list, e.g. {0,1} < {0,2} < {1,2}. fn returns false
// to stop early; for_each_subset returns false iff stopped.
template <typename Fn>
bool for_each_subset(int m, int r, Fn&& fn) {
  if (r < 0 || r > m) return true;
  if (r == 0) return fn(Mask{0});
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << i;
    if (!fn(s)) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t acc = 1;
  for (int i = 0; i < r; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

}  // namespace abc
