#include "abcvote/generate.hpp"

namespace abc {

ApprovalProfile generate_random(int n, int m, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxBits || m < 1 || m > kMaxBits)
    throw std::invalid_argument("generate_random: n and m must be in [1, 64]");
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("generate_random: p must be in (0, 1]");
  // threshold = round-down of p * 2^53; exact for any double p <= 1
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(p * 9007199254740992.0);
  std::mt19937_64 rng(seed);
  ApprovalProfile prof;
  prof.n = n;
  prof.m = m;
  prof.ballots.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c)
      if ((rng() >> 11) < threshold) prof.ballots[i] |= Mask{1} << c;
  return prof;
}

ApprovalProfile generate_polarized(const std::vector<std::pair<int, int>>& groups) {
  if (groups.empty()) throw std::invalid_argument("generate_polarized: no groups");
  int n = 0, m = 0;
  for (auto [gs, cs] : groups) {
    if (gs < 1 || cs < 1) throw std::invalid_argument("generate_polarized: group sizes must be positive");
    n += gs;
    m += cs;
  }
  if (n > kMaxBits || m > kMaxBits)
    throw std::invalid_argument("generate_polarized: totals exceed 64");
  ApprovalProfile prof;
  prof.n = n;
  prof.m = m;
  int c0 = 0;
  for (auto [gs, cs] : groups) {
    Mask block = full_mask(cs) << c0;
    for (int i = 0; i < gs; ++i) prof.ballots.push_back(block);
    c0 += cs;
  }
  return prof;
}

InstanceEnumerator::InstanceEnumerator(int n_max, int m_max, int k_max)
    : n_max_(n_max), m_max_(m_max), k_max_(k_max) {
  if (n_max < 1 || m_max < 1 || k_max < 1)
    throw std::invalid_argument("InstanceEnumerator: bounds must be >= 1");
  if (n_max * m_max > 62)
    throw std::invalid_argument("InstanceEnumerator: n_max * m_max too large to enumerate");
  k_ = 1;
}

std::uint64_t InstanceEnumerator::total_count() const {
  std::uint64_t total = 0;
  for (int n = 1; n <= n_max_; ++n)
    for (int m = 1; m <= m_max_; ++m)
      total += (std::uint64_t{1} << (std::uint64_t)(m * n)) *
               (std::uint64_t)std::min(k_max_, m);
  return total;
}

bool InstanceEnumerator::next(const ApprovalProfile*& profile, int& k) {
  if (done_) return false;
  if (fresh_) {
    profile_.n = n_;
    profile_.m = m_;
    profile_.ballots.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      profile_.ballots[i] = (code_ >> (i * m_)) & full_mask(m_);
    fresh_ = false;
  }
  profile = &profile_;
  k = k_;
  ++index_;
  // advance to the next coordinate tuple
  if (k_ < std::min(k_max_, m_)) {
    ++k_;
  } else {
    k_ = 1;
    done_ = !advance_profile();
    fresh_ = true;
  }
  return true;
}

bool InstanceEnumerator::advance_profile() {
  ++code_;
  if (code_ < (std::uint64_t{1} << (std::uint64_t)(m_ * n_))) return true;
  code_ = 0;
  if (++m_ <= m_max_) return true;
  m_ = 1;
  return ++n_ <= n_max_;
}

void InstanceEnumerator::skip_to(std::uint64_t index) {
  n_ = 1; m_ = 1; code_ = 0; k_ = 1;
  fresh_ = true; done_ = false; index_ = index;
  std::uint64_t remaining = index;
  for (int n = 1; n <= n_max_; ++n) {
    for (int m = 1; m <= m_max_; ++m) {
      const std::uint64_t codes = std::uint64_t{1} << (std::uint64_t)(m * n);
      const std::uint64_t kcnt = (std::uint64_t)std::min(k_max_, m);
      const std::uint64_t block = codes * kcnt;
      if (remaining < block) {
        n_ = n; m_ = m;
        code_ = remaining / kcnt;
        k_ = (int)(remaining % kcnt) + 1;
        return;
      }
      remaining -= block;
    }
  }
  done_ = true;
}

}  // namespace abc
