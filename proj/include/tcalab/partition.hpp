#pragma once

#include "tcalab/errors.hpp"
#include "tcalab/rational.hpp"
#include "tcalab/upoly.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tcalab {

enum class StripKind { HS, VS };

// Weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so the empty partition has a single value.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (p_[i] <= 0) throw Error(Errc::InvalidInput, "partition parts must be positive");
      if (i > 0 && p_[i] > p_[i - 1]) throw Error(Errc::InvalidInput, "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return p_; }
  // 0-based row access; rows past the end have length 0.
  int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const {
    int s = 0;
    for (int x : p_) s += x;
    return s;
  }
  bool empty() const { return p_.empty(); }
  int first() const { return p_.empty() ? 0 : p_[0]; }
  int multiplicity(int i) const { return static_cast<int>(std::count(p_.begin(), p_.end(), i)); }

  std::string str() const {
    if (p_.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

 private:
  std::vector<int> p_;
};

// Order used for every enumeration: lexicographic descending on parts.
struct LexDescending {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

inline void sort_lex_descending(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), LexDescending{}); }

inline Partition transpose(const Partition& lam) {
  std::vector<int> t(lam.first(), 0);
  for (int r : lam.parts())
    for (int j = 0; j < r; ++j) ++t[j];
  return Partition(std::move(t));
}

// mu ⊆ lam
inline bool contains(const Partition& lam, const Partition& mu) {
  if (mu.length() > lam.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > lam[i]) return false;
  return true;
}

inline bool is_strip(const Partition& lam, const Partition& mu, StripKind kind) {
  if (kind == StripKind::VS) return is_strip(transpose(lam), transpose(mu), StripKind::HS);
  if (!contains(lam, mu)) return false;
  for (int i = 0; i < lam.length(); ++i)
    if (mu[i] < lam[i + 1]) return false;
  return true;
}

inline Partition with_first(int first, const Partition& rest) {
  std::vector<int> v{first};
  v.insert(v.end(), rest.parts().begin(), rest.parts().end());
  return Partition(std::move(v));
}

inline Partition without_first(const Partition& lam) {
  if (lam.empty()) return lam;
  return Partition(std::vector<int>(lam.parts().begin() + 1, lam.parts().end()));
}

namespace detail {

inline void hs_remove(const Partition& lam, int row, int left, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == lam.length()) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  const int hi = lam[row], lo = lam[row + 1];
  for (int m = hi; m >= lo; --m) {
    if (hi - m > left) break;
    cur[row] = m;
    hs_remove(lam, row + 1, left - (hi - m), cur, out);
  }
}

inline void vs_remove(const Partition& lam, int row, int left, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row == lam.length()) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  for (int eps = 0; eps <= 1 && eps <= left; ++eps) {
    const int m = lam[row] - eps;
    if (row > 0 && cur[row - 1] < m) continue;
    cur[row] = m;
    vs_remove(lam, row + 1, left - eps, cur, out);
  }
}

// Rows 1.. of the result; row 0 absorbs whatever is left.
inline void hs_add(const Partition& lam, int row, int left, std::vector<int>& cur, std::vector<Partition>& out) {
  if (row > lam.length()) {
    cur[0] = lam[0] + left;
    out.emplace_back(cur);
    return;
  }
  const int lo = lam[row], hi = lam[row - 1];
  for (int m = lo; m <= hi && m - lo <= left; ++m) {
    cur[row] = m;
    hs_add(lam, row + 1, left - (m - lo), cur, out);
  }
}

inline void vs_add(const Partition& lam, int row, int rows, int left, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (row == rows) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  for (int eps = 0; eps <= 1 && eps <= left; ++eps) {
    const int m = lam[row] + eps;
    if (row > 0 && cur[row - 1] < m) continue;
    cur[row] = m;
    vs_add(lam, row + 1, rows, left - eps, cur, out);
  }
}

}  // namespace detail

// All mu with lam/mu a strip of the given kind and size d.
inline std::vector<Partition> remove_strips(const Partition& lam, int d, StripKind kind) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> cur(lam.length(), 0);
  if (kind == StripKind::HS)
    detail::hs_remove(lam, 0, d, cur, out);
  else
    detail::vs_remove(lam, 0, d, cur, out);
  sort_lex_descending(out);
  return out;
}

// All nu with nu/lam a strip of the given kind and size d.
inline std::vector<Partition> add_strips(const Partition& lam, int d, StripKind kind) {
  std::vector<Partition> out;
  if (d < 0) return out;
  if (kind == StripKind::HS) {
    std::vector<int> cur(lam.length() + 1, 0);
    detail::hs_add(lam, 1, d, cur, out);
  } else {
    const int rows = lam.length() + d;
    std::vector<int> cur(rows, 0);
    detail::vs_add(lam, 0, rows, d, cur, out);
  }
  sort_lex_descending(out);
  return out;
}

// Every mu with lam/mu a strip of the given kind, any size.
inline std::vector<Partition> remove_strips_all(const Partition& lam, StripKind kind) {
  std::vector<Partition> out;
  for (int d = 0; d <= lam.size(); ++d) {
    auto v = remove_strips(lam, d, kind);
    out.insert(out.end(), v.begin(), v.end());
  }
  sort_lex_descending(out);
  return out;
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Sizes 0..n in increasing size, each size in lexicographic descending order.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto v = partitions_of(k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

struct PartitionStats {
  std::map<int, int> multiplicities;  // i -> m_i(lam), only nonzero entries
  BigInt factorial_weight;            // lam! = prod m_i!
  int length = 0;
  int size = 0;
};

inline PartitionStats stats(const Partition& lam) {
  PartitionStats s;
  for (int x : lam.parts()) ++s.multiplicities[x];
  s.factorial_weight = 1;
  for (auto [i, m] : s.multiplicities) s.factorial_weight *= factorial(m);
  s.length = lam.length();
  s.size = lam.size();
  return s;
}

inline BigInt factorial_weight(const Partition& lam) { return stats(lam).factorial_weight; }

inline std::vector<int> hook_lengths(const Partition& lam) {
  const Partition t = transpose(lam);
  std::vector<int> h;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) h.push_back((lam[i] - j - 1) + (t[j] - i - 1) + 1);
  return h;
}

inline BigInt hook_dimension(const Partition& lam) {
  BigInt den = 1;
  for (int h : hook_lengths(lam)) den *= h;
  return factorial(lam.size()) / den;
}

// mu + (1^N): add one box to each of the first N rows.
inline Partition add_column(const Partition& mu, int N) {
  std::vector<int> v(std::max(mu.length(), N), 0);
  for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = mu[i] + (i < N ? 1 : 0);
  return Partition(std::move(v));
}

// d_mu(N) = (N+|mu|)! / (prod_i (N+mu_i-i+1) * (N-l)! * prod hooks), written as a product
// of the linear factors of (N+|mu|)!/(N-l)! that survive the first cancellation.
inline UPoly stable_dimension_poly(const Partition& mu) {
  const int l = mu.length();
  std::set<int> cancelled;
  for (int i = 1; i <= l; ++i) cancelled.insert(mu[i - 1] - i + 1);
  UPoly p = UPoly::constant(1);
  for (int k = -l + 1; k <= mu.size(); ++k)
    if (!cancelled.count(k)) p = p * UPoly::linear(k);
  BigInt hooks = 1;
  for (int h : hook_lengths(mu)) hooks *= h;
  return p * Rational(1, hooks);
}

// The sequence (first, rest_1, rest_2, ...); first may be negative or smaller than rest_1.
struct PrefixedPartition {
  int first = 0;
  Partition rest;

  bool is_partition() const { return first >= rest.first() && first >= 0; }
  Partition to_partition() const {
    if (!is_partition()) throw Error(Errc::InvalidInput, "prefixed sequence is not a partition");
    return with_first(first, rest);
  }
  static PrefixedPartition from(const Partition& p) { return {p.first(), without_first(p)}; }
  friend bool operator==(const PrefixedPartition&, const PrefixedPartition&) = default;
};

struct BorderStripRemoval {
  Partition result;
  int size = 0;
  int height = 0;
  friend bool operator==(const BorderStripRemoval&, const BorderStripRemoval&) = default;
};

// Connected strips with no 2x2 square that contain the last box of row 1 and
// leave a partition behind. They are initial segments of the rim walk that starts
// at that box, so there is at most one per size. Returned by increasing size.
inline std::vector<BorderStripRemoval> aligned_border_strips(const Partition& shape) {
  std::vector<BorderStripRemoval> out;
  if (shape.empty()) return out;
  const int L = shape.length();
  std::vector<std::pair<int, int>> path;
  int r = 0, c = shape[0] - 1;
  while (true) {
    path.emplace_back(r, c);
    if (r + 1 < L && shape[r + 1] > c)
      ++r;
    else if (c > 0)
      --c;
    else
      break;
  }
  std::vector<int> removed(L, 0);
  for (std::size_t s = 1; s <= path.size(); ++s) {
    ++removed[path[s - 1].first];
    std::vector<int> rows(L);
    bool ok = true;
    int height = 0;
    for (int i = 0; i < L; ++i) {
      rows[i] = shape[i] - removed[i];
      if (removed[i] > 0) ++height;
      if (i > 0 && rows[i] > rows[i - 1]) ok = false;
    }
    if (ok) out.push_back({Partition(rows), static_cast<int>(s), height});
  }
  return out;
}

inline std::vector<BorderStripRemoval> aligned_border_strips(const PrefixedPartition& shape) {
  return aligned_border_strips(shape.to_partition());
}

// Number of edge-connected components of the skew shape lam/mu.
inline int strip_components(const Partition& lam, const Partition& mu) {
  if (!contains(lam, mu)) throw Error(Errc::InvalidInput, "strip_components: mu not contained in lam");
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = mu[i]; j < lam[i]; ++j) cells.insert({i, j});
  int comps = 0;
  while (!cells.empty()) {
    ++comps;
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    cells.erase(cells.begin());
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}}) {
        auto it = cells.find(nb);
        if (it != cells.end()) {
          stack.push_back(nb);
          cells.erase(it);
        }
      }
    }
  }
  return comps;
}

struct ShiftedNormalization {
  bool singular = true;
  int sign = 0;
  Partition normalized;
  int inversions = 0;  // l(w)

  static ShiftedNormalization make_singular() { return {}; }
  friend bool operator==(const ShiftedNormalization&, const ShiftedNormalization&) = default;
};

// w.alpha = w(alpha + rho) - rho with rho = (-1,-2,...), alpha padded by zeros forever.
// Only the first entry can be out of order, so w moves it past k entries.
inline ShiftedNormalization shifted_normalize(const PrefixedPartition& alpha) {
  const Partition& lam = alpha.rest;
  const int L = lam.length();
  const int b = alpha.first - 1;
  // The zero padding shifts to -(L+2), -(L+3), ...: every integer below -(L+1).
  if (b <= -(L + 2)) return ShiftedNormalization::make_singular();
  int k = 0;
  for (int j = 1; j <= L; ++j) {
    const int bj = lam[j - 1] - (j + 1);
    if (bj == b) return ShiftedNormalization::make_singular();
    if (bj > b) k = j;
  }
  std::vector<int> mu;
  for (int i = 0; i < k; ++i) mu.push_back(lam[i] - 1);
  mu.push_back(alpha.first + k);
  for (int i = k; i < L; ++i) mu.push_back(lam[i]);
  ShiftedNormalization r;
  r.singular = false;
  r.inversions = k;
  r.sign = (k % 2 == 0) ? 1 : -1;
  r.normalized = Partition(std::move(mu));
  return r;
}

}  // namespace tcalab
