#pragma once

#include "tcalab/lincomb.hpp"
#include "tcalab/sym_char.hpp"

#include <utility>

namespace tcalab {

enum class Basis { L, Q };

inline const char* basis_name(Basis b) { return b == Basis::L ? "L" : "Q"; }

// Class in K(Mod_K) written in the simple (L) or injective (Q) basis.
struct KClassK {
  Basis basis = Basis::Q;
  PartitionComb coeffs;

  static KClassK of(Basis b, const Partition& p, Coeff c = 1) { return {b, PartitionComb::basis(p, c)}; }

  KClassK& operator+=(const KClassK& o) {
    require_same(o, "addition");
    coeffs += o.coeffs;
    return *this;
  }
  KClassK& operator-=(const KClassK& o) {
    require_same(o, "subtraction");
    coeffs -= o.coeffs;
    return *this;
  }
  friend KClassK operator+(KClassK a, const KClassK& b) { return a += b; }
  friend KClassK operator-(KClassK a, const KClassK& b) { return a -= b; }
  friend KClassK operator*(Coeff s, KClassK a) {
    a.coeffs *= s;
    return a;
  }
  friend bool operator==(const KClassK& a, const KClassK& b) {
    if (a.coeffs.is_zero() && b.coeffs.is_zero()) return true;
    return a.basis == b.basis && a.coeffs == b.coeffs;
  }
  bool is_zero() const { return coeffs.is_zero(); }

  void require_same(const KClassK& o, const char* what) const {
    if (basis != o.basis && !coeffs.is_zero() && !o.coeffs.is_zero())
      throw Error(Errc::BasisMismatch, std::string(what) + " of " + basis_name(basis) + "- and " +
                                           basis_name(o.basis) + "-basis classes");
  }
};

// Class in K(Mod_A): sum t_lam [S_lam] + sum p_lam [A (x) S_lam].
struct AClass {
  VClass torsion;
  VClass projective;

  static AClass simple(const Partition& p, Coeff c = 1) { return {VClass::basis(p, c), {}}; }
  static AClass free(const Partition& p, Coeff c = 1) { return {{}, VClass::basis(p, c)}; }

  AClass& operator+=(const AClass& o) {
    torsion += o.torsion;
    projective += o.projective;
    return *this;
  }
  AClass& operator-=(const AClass& o) {
    torsion -= o.torsion;
    projective -= o.projective;
    return *this;
  }
  friend AClass operator+(AClass a, const AClass& b) { return a += b; }
  friend AClass operator-(AClass a, const AClass& b) { return a -= b; }
  friend AClass operator*(Coeff s, AClass a) {
    a.torsion *= s;
    a.projective *= s;
    return a;
  }
  friend bool operator==(const AClass&, const AClass&) = default;
  bool is_zero() const { return torsion.is_zero() && projective.is_zero(); }
};

// [Q_lam] = sum_{lam/mu in HS} [L_mu]
inline KClassK q_to_l(const KClassK& x) {
  if (x.basis != Basis::Q) throw Error(Errc::BasisMismatch, "q_to_l expects a Q-basis class");
  KClassK r{Basis::L, {}};
  for (const auto& [lam, c] : x.coeffs.terms())
    for (const Partition& mu : remove_strips_all(lam, StripKind::HS)) r.coeffs.add(mu, c);
  return r;
}

// [L_mu] = sum_{mu/nu in VS} (-1)^{|mu|-|nu|} [Q_nu]
inline KClassK l_to_q(const KClassK& x) {
  if (x.basis != Basis::L) throw Error(Errc::BasisMismatch, "l_to_q expects an L-basis class");
  KClassK r{Basis::Q, {}};
  for (const auto& [mu, c] : x.coeffs.terms())
    for (int d = 0; d <= mu.length(); ++d)
      for (const Partition& nu : remove_strips(mu, d, StripKind::VS)) r.coeffs.add(nu, d % 2 == 0 ? c : -c);
  return r;
}

inline KClassK to_basis(const KClassK& x, Basis b) {
  if (x.basis == b) return x;
  return b == Basis::L ? q_to_l(x) : l_to_q(x);
}

// Littlewood-Richardson product; the structure constants are the same in both bases.
inline KClassK k_product(const KClassK& x, const KClassK& y) {
  x.require_same(y, "k_product");
  return {x.basis, schur_product(x.coeffs, y.coeffs)};
}

namespace detail {

inline Coeff pair_basis(Basis bx, const Partition& lam, Basis by, const Partition& mu) {
  if (bx == Basis::Q && by == Basis::Q) return is_strip(lam, mu, StripKind::HS) ? 1 : 0;
  if (bx == Basis::L && by == Basis::Q) return lam == mu ? 1 : 0;
  if (bx == Basis::L && by == Basis::L) {
    if (!is_strip(mu, lam, StripKind::VS)) return 0;
    return (mu.size() - lam.size()) % 2 == 0 ? 1 : -1;
  }
  Coeff s = 0;
  for (const Partition& nu : remove_strips_all(lam, StripKind::HS))
    if (is_strip(mu, nu, StripKind::VS)) s += (mu.size() - nu.size()) % 2 == 0 ? 1 : -1;
  return s;
}

}  // namespace detail

// Euler pairing <x, y> = sum (-1)^i dim Ext^i(x, y).
inline Coeff pairing(const KClassK& x, const KClassK& y) {
  Coeff s = 0;
  for (const auto& [lam, a] : x.coeffs.terms())
    for (const auto& [mu, b] : y.coeffs.terms()) s += a * b * detail::pair_basis(x.basis, lam, y.basis, mu);
  return s;
}

// [Q_lam] <-> (-1)^{|lam|} [L_{lam^T}]
inline KClassK fourier_K(const KClassK& x) {
  KClassK r{x.basis == Basis::Q ? Basis::L : Basis::Q, {}};
  for (const auto& [lam, c] : x.coeffs.terms()) r.coeffs.add(transpose(lam), lam.size() % 2 == 0 ? c : -c);
  return r;
}

// Branching: [S_lam] -> sum of single-box removals.
inline VClass schur_derivative(const VClass& x) {
  VClass r;
  for (const auto& [lam, c] : x.terms())
    for (const Partition& mu : remove_strips(lam, 1, StripKind::HS)) r.add(mu, c);
  return r;
}

// Leibniz with D(A) = A on the projective part.
inline AClass schur_derivative(const AClass& x) {
  return {schur_derivative(x.torsion), x.projective + schur_derivative(x.projective)};
}

// [dM] = [DM] - [M]
inline AClass schur_partial(const AClass& x) { return schur_derivative(x) - x; }

// Lexicographically least (n1, n2) with d^{n1} D^{n2} x = 0.
inline std::pair<int, int> diff_annihilator(const AClass& x) {
  if (x.is_zero()) throw Error(Errc::ZeroClass, "diff_annihilator of the zero class");
  const int bound = std::max(x.torsion.max_degree(), x.projective.max_degree()) + 1;
  std::vector<AClass> d_powers{x};
  for (int n2 = 1; n2 <= bound; ++n2) d_powers.push_back(schur_derivative(d_powers.back()));
  // cur[n2] holds d^{n1} D^{n2} x for the current n1.
  std::vector<AClass> cur = d_powers;
  for (int n1 = 0; n1 <= bound; ++n1) {
    for (int n2 = 0; n2 <= bound; ++n2)
      if (cur[n2].is_zero()) return {n1, n2};
    for (auto& c : cur) c = schur_partial(c);
  }
  throw Error(Errc::InvariantViolation, "diff_annihilator: no annihilating pair within degree bound");
}

// Torsion injective I_lam = sum_{lam/mu in HS} [S_mu].
inline VClass injective_envelope_class(const Partition& lam) {
  VClass r;
  for (const Partition& mu : remove_strips_all(lam, StripKind::HS)) r.add(mu, 1);
  return r;
}

}  // namespace tcalab
