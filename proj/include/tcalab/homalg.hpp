#pragma once

#include "tcalab/hilbert.hpp"
#include "tcalab/ktheory.hpp"
#include "tcalab/partition.hpp"

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tcalab {

// ---------------------------------------------------------------------------
// Injective resolution 0 -> L_lam -> I^0 -> I^1 -> ...

struct InjResolution {
  Partition lambda;
  std::vector<std::vector<Partition>> terms;  // term j: mu with lam/mu in VS_j
  std::map<std::pair<Partition, Partition>, int> signs;  // (mu, mu') for single-box covers between terms

  int length() const { return static_cast<int>(terms.size()) - 1; }
  int sign(const Partition& mu, const Partition& nu) const {
    auto it = signs.find({mu, nu});
    return it == signs.end() ? 0 : it->second;
  }
};

namespace detail {

// Coordinates of mu in the product poset prod_i [m_i(lam)]: for each distinct part
// size of lam (increasing), how many rows of that size lost their box.
inline std::vector<int> vs_coordinates(const Partition& lam, const Partition& mu) {
  std::vector<int> a;
  int r = lam.length() - 1;
  while (r >= 0) {
    const int s = lam[r];
    int lowered = 0;
    while (r >= 0 && lam[r] == s) {
      if (mu[r] == s - 1) ++lowered;
      --r;
    }
    a.push_back(lowered);
  }
  return a;
}

}  // namespace detail

inline InjResolution bgg_resolution(const Partition& lam) {
  InjResolution res;
  res.lambda = lam;
  for (int j = 0; j <= lam.length(); ++j) res.terms.push_back(remove_strips(lam, j, StripKind::VS));
  for (int j = 0; j + 1 < static_cast<int>(res.terms.size()); ++j) {
    for (const Partition& mu : res.terms[j]) {
      const std::vector<int> a = detail::vs_coordinates(lam, mu);
      for (const Partition& nu : res.terms[j + 1]) {
        if (!contains(mu, nu)) continue;
        const std::vector<int> b = detail::vs_coordinates(lam, nu);
        // exactly one coordinate i goes up by one; sign (-1)^{a_1+...+a_{i-1}}
        int before = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (b[i] != a[i]) break;
          before += a[i];
        }
        res.signs[{mu, nu}] = before % 2 == 0 ? 1 : -1;
      }
    }
  }
  return res;
}

// Ext^d(L_lam, L_mu) is one-dimensional exactly when mu/lam in VS_d.
inline std::map<int, int> ext_simples(const Partition& lam, const Partition& mu) {
  std::map<int, int> r;
  if (is_strip(mu, lam, StripKind::VS)) r[mu.size() - lam.size()] = 1;
  return r;
}

// ---------------------------------------------------------------------------
// Local cohomology of L_lam^{>=D}

struct LocalCohomologyTable {
  std::map<int, std::vector<Partition>> rows;  // only nonempty rows; each sorted by size
  std::map<int, Partition> generator;

  const std::vector<Partition>& row(int i) const {
    static const std::vector<Partition> none;
    auto it = rows.find(i);
    return it == rows.end() ? none : it->second;
  }
  std::optional<int> min_row() const {
    if (rows.empty()) return std::nullopt;
    return rows.begin()->first;
  }
  std::optional<int> max_row() const {
    if (rows.empty()) return std::nullopt;
    return rows.rbegin()->first;
  }
  friend bool operator==(const LocalCohomologyTable&, const LocalCohomologyTable&) = default;
};

inline void require_valid_D(const Partition& lam, int D) {
  if (D < lam.first())
    throw Error(Errc::InvalidD, "D = " + std::to_string(D) + " is below lam_1 = " + std::to_string(lam.first()));
}

inline LocalCohomologyTable local_cohomology(const Partition& lam, int D) {
  require_valid_D(lam, D);
  LocalCohomologyTable t;
  for (const BorderStripRemoval& b : aligned_border_strips(with_first(D, lam))) t.rows[b.height].push_back(b.result);
  for (auto& [i, row] : t.rows) {
    std::sort(row.begin(), row.end(), [](const Partition& x, const Partition& y) { return x.size() < y.size(); });
    t.generator[i] = row.front();
  }
  return t;
}

inline int depth(const Partition& lam, int D) {
  require_valid_D(lam, D);
  return with_first(D, lam).multiplicity(D);
}

// sum_i (-1)^i H~ of the i-th local cohomology
inline MPoly q_from_local_cohomology(const Partition& lam, int D) {
  const LocalCohomologyTable t = local_cohomology(lam, D);
  MPoly q(VarFamily::t);
  for (const auto& [i, row] : t.rows)
    for (const Partition& p : row) q += enhanced_of_simple(p) * Rational(i % 2 == 0 ? 1 : -1);
  return q;
}

// [L_lam^{>=D}] = [R Gamma] + [R S(L_lam)] in K(Mod_A).
inline AClass class_of_truncation(const Partition& lam, int D) {
  AClass x;
  x.projective = l_to_q(KClassK::of(Basis::L, lam)).coeffs;
  for (const auto& [i, row] : local_cohomology(lam, D).rows)
    for (const Partition& p : row) x.torsion.add(p, i % 2 == 0 ? 1 : -1);
  return x;
}

// <Q_lam, L_mu> read off the local cohomology of the saturation L_mu^0.
inline Coeff pairing_ql_border_strip(const Partition& lam, const Partition& mu) {
  // lam = (d, mu) with d >= mu_1 is a constituent of L_mu^0 itself.
  const Coeff m0 = (without_first(lam) == mu && lam.first() >= mu.first()) ? 1 : 0;
  Coeff rest = 0;
  for (const auto& [i, row] : local_cohomology(mu, mu.first()).rows)
    for (const Partition& p : row)
      if (p == lam) rest += i % 2 == 0 ? 1 : -1;
  return m0 - rest;
}

// ---------------------------------------------------------------------------
// Free resolution shapes

// Each step past the explicit range appends one box in the given column to the
// matching generator of the last explicit degree.
struct TailRule {
  std::vector<int> columns;
  friend bool operator==(const TailRule&, const TailRule&) = default;
};

inline Partition add_box_in_column(const Partition& lam, int c) {
  const int r = transpose(lam)[c - 1];
  if (lam[r] != c - 1) throw Error(Errc::InvalidInput, "tail rule: cannot add a box in column " + std::to_string(c));
  std::vector<int> v = lam.parts();
  if (r == lam.length())
    v.push_back(1);
  else
    ++v[r];
  return Partition(std::move(v));
}

struct FreeResShape {
  std::map<int, std::vector<Partition>> explicit_terms;
  std::optional<TailRule> tail;
  bool complete = false;  // explicit range is the whole resolution

  int last_explicit() const { return explicit_terms.empty() ? -1 : explicit_terms.rbegin()->first; }

  // nullopt when F_i is not described.
  std::optional<std::vector<Partition>> generators(int i) const {
    if (i < 0) return std::vector<Partition>{};
    const int last = last_explicit();
    if (i <= last) {
      auto it = explicit_terms.find(i);
      return it == explicit_terms.end() ? std::vector<Partition>{} : it->second;
    }
    if (complete) return std::vector<Partition>{};
    if (!tail) return std::nullopt;
    std::vector<Partition> g = explicit_terms.at(last);
    if (tail->columns.size() != g.size())
      throw Error(Errc::InvalidInput, "tail rule needs one column per generator of the last explicit term");
    for (int step = last; step < i; ++step)
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = add_box_in_column(g[k], tail->columns[k]);
    return g;
  }
};

// alpha(i) for the EFW complex of M(alpha, e).
inline Partition efw_alpha(const Partition& alpha, int e, int i) {
  if (i == 0) return alpha;
  const int len = std::max(i, alpha.length());
  std::vector<int> v(len);
  for (int j = 1; j <= len; ++j) {
    if (j == 1)
      v[0] = alpha[0] + e;
    else if (j <= i)
      v[j - 1] = alpha[j - 2] + 1;
    else
      v[j - 1] = alpha[j - 1];
  }
  return Partition(std::move(v));
}

inline FreeResShape efw_resolution(const Partition& alpha, int e, int H) {
  if (e < 1) throw Error(Errc::InvalidInput, "efw_resolution: e must be positive");
  FreeResShape s;
  const int top = std::max(H, alpha.length() + 1);
  for (int i = 0; i <= top; ++i) s.explicit_terms[i] = {efw_alpha(alpha, e, i)};
  s.tail = TailRule{{1}};
  return s;
}

inline FreeResShape syzygy_shape_ln(int n, int D, int H) {
  if (n < 1) throw Error(Errc::InvalidInput, "syzygy_shape_ln: n must be at least 1");
  if (D <= n) throw Error(Errc::InvalidD, "syzygy_shape_ln: needs D > n");
  FreeResShape s;
  s.explicit_terms[0] = {Partition{D, n}};
  for (int i = 1; i <= std::max(H, 1); ++i) {
    std::vector<int> a{D, n}, b{D, n + 1};
    a.insert(a.end(), i, 1);
    b.insert(b.end(), i - 1, 1);
    s.explicit_terms[i] = {Partition(a), Partition(b)};
  }
  s.tail = TailRule{{1, 1}};
  return s;
}

inline FreeResShape projective_shape(const Partition& lam) {
  FreeResShape s;
  s.explicit_terms[0] = {lam};
  s.complete = true;
  return s;
}

namespace detail {

inline int max_degree(const std::vector<Partition>& g) {
  int d = std::numeric_limits<int>::min();
  for (const Partition& p : g) d = std::max(d, p.size());
  return d;
}

}  // namespace detail

// max_i (max generator degree of F_i - i)
inline int regularity(const FreeResShape& s) {
  if (s.explicit_terms.empty()) throw Error(Errc::InvalidInput, "regularity: empty shape");
  if (!s.tail && !s.complete) throw Error(Errc::Unstable, "regularity: truncated shape without a tail rule");
  const int last = s.last_explicit();
  int reg = std::numeric_limits<int>::min();
  for (int i = 0; i <= last; ++i) {
    const auto g = *s.generators(i);
    if (!g.empty()) reg = std::max(reg, detail::max_degree(g) - i);
  }
  if (s.tail) {
    const int a = detail::max_degree(*s.generators(last + 1)) - (last + 1);
    const int b = detail::max_degree(*s.generators(last + 2)) - (last + 2);
    if (a != b) throw Error(Errc::Unstable, "regularity: tail strands do not stabilize");
    reg = std::max(reg, a);
  }
  return reg;
}

inline constexpr int kInfiniteDepth = std::numeric_limits<int>::max();

// Stabilized m - pdim F(C^m), with pdim F(C^m) = max{i : some generator of F_i has <= m rows}.
inline int depth_from_resolution(const FreeResShape& s) {
  if (s.explicit_terms.empty()) throw Error(Errc::InvalidInput, "depth_from_resolution: empty shape");
  if (s.complete && !s.tail) return kInfiniteDepth;
  if (!s.tail) throw Error(Errc::Unstable, "depth_from_resolution: truncated shape without a tail rule");
  for (int c : s.tail->columns)
    if (c != 1) throw Error(Errc::Unstable, "depth_from_resolution: tail does not add rows");
  const int last = s.last_explicit();
  int rows_max = 0;
  for (int i = 0; i <= last + 1; ++i) {
    const auto g = *s.generators(i);
    for (const Partition& p : g) rows_max = std::max(rows_max, p.length());
  }

  auto pdim = [&](int m) {
    int best = -1;
    for (int i = 0;; ++i) {
      const auto g = *s.generators(i);
      int fewest = std::numeric_limits<int>::max();
      for (const Partition& p : g) {
        fewest = std::min(fewest, p.length());
        if (p.length() <= m) best = i;
      }
      // Past the explicit range every generator gains a row per step.
      if (i > last && fewest > m) break;
    }
    return best;
  };
  const int d1 = rows_max - pdim(rows_max);
  const int d2 = rows_max + 1 - pdim(rows_max + 1);
  if (d1 != d2) throw Error(Errc::Unstable, "depth_from_resolution: no stabilization at the tail boundary");
  return d1;
}

// ---------------------------------------------------------------------------
// Poincare series P_M(t, q) = sum_n (-q)^n H_{Tor_n}(t)

struct PoincareTruncation {
  int bound = 0;
  std::map<std::pair<int, int>, Rational> coeffs;  // (t-degree, q-power) -> coefficient

  void add(int d, int m, const Rational& c) {
    if (c == 0 || d > bound) return;
    auto [it, inserted] = coeffs.emplace(std::make_pair(d, m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  Rational coeff(int d, int m) const {
    auto it = coeffs.find({d, m});
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  friend PoincareTruncation operator-(const PoincareTruncation& a, const PoincareTruncation& b) {
    PoincareTruncation r = a;
    r.bound = std::min(a.bound, b.bound);
    for (const auto& [k, c] : b.coeffs) r.add(k.first, k.second, -c);
    r.drop_above(r.bound);
    return r;
  }
  friend PoincareTruncation operator+(const PoincareTruncation& a, const PoincareTruncation& b) {
    PoincareTruncation r = a;
    r.bound = std::min(a.bound, b.bound);
    for (const auto& [k, c] : b.coeffs) r.add(k.first, k.second, c);
    r.drop_above(r.bound);
    return r;
  }
  friend bool operator==(const PoincareTruncation& a, const PoincareTruncation& b) {
    return a.bound == b.bound && a.coeffs == b.coeffs;
  }
  void drop_above(int b) {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = it->first.first > b ? coeffs.erase(it) : std::next(it);
  }
};

inline PoincareTruncation poincare_truncated(const FreeResShape& s, int B) {
  PoincareTruncation P;
  P.bound = B;
  const auto f0 = s.generators(0);
  int base = std::numeric_limits<int>::max();
  for (const Partition& p : *f0) base = std::min(base, p.size());
  const int last = s.last_explicit();
  for (int n = 0;; ++n) {
    const auto g = s.generators(n);
    if (!g) {
      // Minimal resolutions climb at least one degree per step.
      if (base != std::numeric_limits<int>::max() && base + n > B) break;
      throw Error(Errc::InsufficientShape, "poincare_truncated: F_" + std::to_string(n) + " is needed below the bound");
    }
    int lowest = std::numeric_limits<int>::max();
    for (const Partition& p : *g) {
      lowest = std::min(lowest, p.size());
      const Rational c = Rational(hook_dimension(p)) / Rational(factorial(p.size()));
      P.add(p.size(), n, n % 2 == 0 ? c : -c);
    }
    if (n >= last && (s.complete || lowest > B)) break;
  }
  return P;
}

struct ClosedFormM0e {
  PoincareTruncation total;        // f + g e^{-qt}
  PoincareTruncation exponential;  // g e^{-qt}
  PoincareTruncation laurent;      // f, reconstructed from the EFW shape
};

// M(0, e): P = f(q) + (sum_{i<e} t^{e-1-i} q^{-i} / (e-1-i)!) e^{-qt} with f(t, 1) = 0.
inline ClosedFormM0e closed_form_m0e(int e, int B) {
  if (e < 1) throw Error(Errc::InvalidInput, "closed_form_m0e: e must be positive");
  ClosedFormM0e r;
  r.exponential.bound = B;
  for (int i = 0; i <= e - 1; ++i)
    for (int k = 0; e - 1 - i + k <= B; ++k) {
      const Rational c = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(e - 1 - i) * factorial(k));
      r.exponential.add(e - 1 - i + k, k - i, c);
    }
  const PoincareTruncation P = poincare_truncated(efw_resolution(Partition{}, e, B), B);
  r.laurent = P - r.exponential;
  std::map<int, Rational> at_q1;
  for (const auto& [k, c] : r.laurent.coeffs) at_q1[k.first] += c;
  for (const auto& [d, c] : at_q1)
    if (c != 0) throw Error(Errc::InvariantViolation, "closed_form_m0e: f(t,1) != 0 in t-degree " + std::to_string(d));
  r.total = r.laurent + r.exponential;
  return r;
}

// ---------------------------------------------------------------------------
// Fourier transform on graded classes

using GradedAClass = std::map<int, AClass>;

inline void normalize(GradedAClass& x) {
  for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

inline GradedAClass fourier_module(const GradedAClass& x) {
  GradedAClass r;
  for (const auto& [k, c] : x) {
    for (const auto& [lam, a] : c.torsion.terms()) r[k + lam.size()].projective.add(transpose(lam), a);
    for (const auto& [lam, a] : c.projective.terms()) r[k + lam.size()].torsion.add(transpose(lam), a);
  }
  normalize(r);
  return r;
}

// Moves every term indexed by lam from degree k to degree k + factor |lam|.
inline GradedAClass regrade(const GradedAClass& x, int factor) {
  GradedAClass r;
  for (const auto& [k, c] : x) {
    for (const auto& [lam, a] : c.torsion.terms()) r[k + factor * lam.size()].torsion.add(lam, a);
    for (const auto& [lam, a] : c.projective.terms()) r[k + factor * lam.size()].projective.add(lam, a);
  }
  normalize(r);
  return r;
}

inline AClass euler_class(const GradedAClass& x) {
  AClass r;
  for (const auto& [k, c] : x) r += (k % 2 == 0 ? 1 : -1) * c;
  return r;
}

// p_{F(M)}(t) = q_M(-t) and q_{F(M)}(t) = p_M(-t), compared through weighted degree B.
inline bool fourier_hilbert_check(const AClass& x, int B) {
  const AClass fx = euler_class(fourier_module({{0, x}}));
  const EnhancedSeries sm = enhanced_of_class(x);
  const EnhancedSeries sf = enhanced_of_class(fx);
  return sf.p.truncated(B) == sm.q.negate_variables().truncated(B) &&
         sf.q.truncated(B) == sm.p.negate_variables().truncated(B);
}

}  // namespace tcalab
