#pragma once

#include "tcalab/ktheory.hpp"
#include "tcalab/mpoly.hpp"
#include "tcalab/sym_char.hpp"
#include "tcalab/upoly.hpp"

#include <map>
#include <optional>
#include <utility>

namespace tcalab {

// H~_M = p exp(T_0) + q
struct EnhancedSeries {
  MPoly p{VarFamily::t};
  MPoly q{VarFamily::t};
  friend bool operator==(const EnhancedSeries&, const EnhancedSeries&) = default;
};

// Polynomial in a_1, a_2, ... evaluated at a_i = m_i(mu).
struct CharPoly {
  MPoly poly{VarFamily::a};
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Y^lam = sum_{mu |- |lam|} trace(c_mu | M_lam) t^mu / mu!
inline MPoly enhanced_of_simple(const Partition& lam) {
  thread_local std::map<Partition, MPoly> memo;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;
  MPoly r(VarFamily::t);
  for (const Partition& mu : partitions_of(lam.size()))
    r.add(Monomial::of_partition(mu), Rational(mn_trace(mu, lam)) / Rational(factorial_weight(mu)));
  memo.emplace(lam, r);
  return r;
}

inline MPoly enhanced_of_vclass(const VClass& x) {
  MPoly r(VarFamily::t);
  for (const auto& [lam, c] : x.terms()) r += enhanced_of_simple(lam) * Rational(c);
  return r;
}

inline EnhancedSeries enhanced_of_class(const AClass& x) {
  return {enhanced_of_vclass(x.projective), enhanced_of_vclass(x.torsion)};
}

// p-part of the saturated class with the given image in K(Mod_K); S(Q_lam) = A (x) S_lam.
inline MPoly p_of_kclass(const KClassK& x) { return enhanced_of_vclass(to_basis(x, Basis::Q).coeffs); }

// Substitute t_1 = t and t_i = 0 for i >= 2: H(t) = p0(t) e^t + q0(t).
inline std::pair<UPoly, UPoly> plain_hilbert(const EnhancedSeries& s) {
  auto restrict = [](const MPoly& f) {
    std::vector<Rational> c;
    for (const auto& [m, a] : f.terms()) {
      if (m.exponents().size() > 1) continue;
      const int d = m.exponent(1);
      if (static_cast<int>(c.size()) <= d) c.resize(d + 1);
      c[d] += a;
    }
    return UPoly(std::move(c));
  };
  return {restrict(s.p), restrict(s.q)};
}

// Linear map prod t_i^{d_i} -> prod (a_i)_{d_i}.
inline CharPoly umbral(const MPoly& p) {
  CharPoly r;
  for (const auto& [m, c] : p.terms()) {
    MPoly img = MPoly::constant(c, VarFamily::a);
    for (std::size_t i = 0; i < m.exponents().size(); ++i)
      if (m.exponents()[i] > 0) img = img * falling_factorial(static_cast<int>(i + 1), m.exponents()[i]);
    r.poly += img;
  }
  return r;
}

// p^lam = sum_{lam/mu in VS} (-1)^{|lam|-|mu|} Y^mu
inline MPoly p_of_simple(const Partition& lam) { return p_of_kclass(KClassK::of(Basis::L, lam)); }

inline CharPoly char_poly_simple(const Partition& lam) { return umbral(p_of_simple(lam)); }

inline CharPoly char_poly_of_class(const AClass& x) { return umbral(enhanced_of_class(x).p); }

inline CharPoly char_poly_of_class(const KClassK& x) { return umbral(p_of_kclass(x)); }

inline Rational eval_char_poly(const CharPoly& X, const Partition& mu) {
  std::vector<Rational> a(mu.first());
  for (int x : mu.parts()) a[x - 1] += 1;
  return X.poly.evaluate(a);
}

struct Modification {
  bool zero = true;
  int sign = 0;
  Partition target;
  friend bool operator==(const Modification&, const Modification&) = default;
};

// X^lam(mu) for mu |- N is sign * trace(c_mu | M_target), or 0.
inline Modification modification(const Partition& lam, int N) {
  if (N < 0) throw Error(Errc::InvalidInput, "modification: N must be nonnegative");
  const ShiftedNormalization s = shifted_normalize({N - lam.size(), lam});
  if (s.singular) return {};
  return {false, s.sign, s.normalized};
}

inline std::int64_t modification_value(const Partition& lam, const Partition& mu) {
  const Modification m = modification(lam, mu.size());
  return m.zero ? 0 : m.sign * mn_trace(mu, m.target);
}

// d(lam) = |lam| + lam_1 - n - 1 with n the multiplicity of lam_1; d(empty) = 0.
inline int stability_degree(const Partition& lam) {
  if (lam.empty()) return 0;
  return lam.size() + lam.first() - lam.multiplicity(lam.first()) - 1;
}

struct LocalCohomologyDegrees {
  int d0 = 0;
  int d1 = 0;
};

// Upper bound on deg q_M. Without explicit H^0, H^1 degrees the module is taken as saturated.
inline int stability_bound(const AClass& x, std::optional<LocalCohomologyDegrees> lc = std::nullopt) {
  const LocalCohomologyDegrees d = lc.value_or(LocalCohomologyDegrees{});
  int bound = std::max(d.d0, d.d1);
  const KClassK lambda = q_to_l({Basis::Q, x.projective});
  for (const auto& [lam, c] : lambda.coeffs.terms()) bound = std::max(bound, stability_degree(lam));
  return bound;
}

inline MPoly t1_derivative(const MPoly& s) { return s.derivative(1); }

}  // namespace tcalab
