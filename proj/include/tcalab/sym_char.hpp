#pragma once

#include "tcalab/lincomb.hpp"
#include "tcalab/partition.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace tcalab {

namespace detail {

// First-column hook lengths (beta numbers) of lam with L = l(lam) beads, descending.
inline std::vector<int> beads(const Partition& lam) {
  const int L = lam.length();
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lam[i] + (L - 1 - i);
  return b;
}

inline Partition from_beads(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int L = static_cast<int>(b.size());
  std::vector<int> p(L);
  for (int i = 0; i < L; ++i) p[i] = b[i] - (L - 1 - i);
  return Partition(std::move(p));
}

// Character value of lam on the cycle type given by mu's parts from index `from` on.
inline std::int64_t mn_rec(const Partition& lam, const Partition& mu, int from,
                           std::map<std::pair<Partition, Partition>, std::int64_t>& memo) {
  if (from == mu.length()) return 1;
  Partition suffix(std::vector<int>(mu.parts().begin() + from, mu.parts().end()));
  auto key = std::make_pair(lam, suffix);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[from];
  std::vector<int> b = beads(lam);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int target = b[i] - r;
    if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++between;
    std::vector<int> nb = b;
    nb[i] = target;
    const std::int64_t v = mn_rec(from_beads(nb), mu, from + 1, memo);
    total += (between % 2 == 0) ? v : -v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// trace(c_mu | M_lam) by the Murnaghan-Nakayama rule. The memo is per thread.
inline std::int64_t mn_trace(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw Error(Errc::SizeMismatch, "mn_trace: |mu| = " + std::to_string(mu.size()) +
                                        " but |lam| = " + std::to_string(lam.size()));
  thread_local std::map<std::pair<Partition, Partition>, std::int64_t> memo;
  return detail::mn_rec(lam, mu, 0, memo);
}

// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type mu.
inline BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  for (auto [i, m] : stats(mu).multiplicities) {
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  return z;
}

// (-1)^{#even parts}: the sign character.
inline int sign_character(const Partition& mu) {
  int e = 0;
  for (int x : mu.parts())
    if (x % 2 == 0) ++e;
  return e % 2 == 0 ? 1 : -1;
}

namespace detail {

struct LrFill {
  const Partition& lam;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // grid[r][c] for cells of nu/lam, 0 elsewhere
  std::vector<int> count;              // count[v] for v = 1..l(mu)
  std::vector<std::pair<int, int>> order;
  std::int64_t found = 0;

  LrFill(const Partition& l, const Partition& m, const Partition& n) : lam(l), mu(m), nu(n) {
    grid.assign(nu.length(), {});
    for (int r = 0; r < nu.length(); ++r) {
      grid[r].assign(nu[r], 0);
      for (int c = nu[r] - 1; c >= lam[r]; --c) order.emplace_back(r, c);
    }
    count.assign(mu.length() + 2, 0);
  }

  void run(std::size_t k) {
    if (k == order.size()) {
      ++found;
      return;
    }
    auto [r, c] = order[k];
    // A row read right to left is decreasing, so row r can hold at most r + 1.
    int hi = std::min(mu.length(), r + 1);
    if (c + 1 < nu[r]) hi = std::min(hi, grid[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lam[r - 1]) lo = grid[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      grid[r][c] = v;
      run(k + 1);
      grid[r][c] = 0;
      --count[v];
    }
  }
};

}  // namespace detail

// c^nu_{lam,mu}: number of LR tableaux of shape nu/lam and content mu.
inline std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (nu.size() != lam.size() + mu.size() || !contains(nu, lam) || !contains(nu, mu)) return 0;
  detail::LrFill f(lam, mu, nu);
  f.run(0);
  return f.found;
}

inline VClass schur_product(const Partition& lam, const Partition& mu) {
  VClass out;
  for (const Partition& nu : partitions_of(lam.size() + mu.size()))
    out.add(nu, lr_coefficient(lam, mu, nu));
  return out;
}

inline VClass schur_product(const VClass& x, const VClass& y) {
  VClass out;
  for (const auto& [lam, a] : x.terms())
    for (const auto& [mu, b] : y.terms()) out += (a * b) * schur_product(lam, mu);
  return out;
}

inline VClass pieri_class(const Partition& lam, int d, StripKind kind) {
  VClass out;
  for (const Partition& nu : add_strips(lam, d, kind)) out.add(nu, 1);
  return out;
}

}  // namespace tcalab
