#pragma once

#include "tcalab/hilbert.hpp"
#include "tcalab/homalg.hpp"
#include "tcalab/ktheory.hpp"
#include "tcalab/quiver.hpp"
#include "tcalab/sym_char.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tcalab {

struct SelfCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Cross-module invariants over all partitions up to `size` (some checks cap it).
inline std::vector<SelfCheck> run_selftest(int size) {
  std::vector<SelfCheck> out;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    SelfCheck c{name, false, ""};
    try {
      c.detail = body();
      c.ok = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(c));
  };
  const auto parts = partitions_up_to(size);

  check("transpose_involution", [&]() -> std::string {
    for (const auto& p : parts)
      if (transpose(transpose(p)) != p || transpose(p).size() != p.size()) return p.str();
    return "";
  });

  check("vs_is_transposed_hs", [&]() -> std::string {
    for (const auto& p : parts)
      for (int d = 0; d <= p.size(); ++d) {
        auto vs = remove_strips(p, d, StripKind::VS);
        std::vector<Partition> via;
        for (const auto& q : remove_strips(transpose(p), d, StripKind::HS)) via.push_back(transpose(q));
        sort_lex_descending(via);
        if (vs != via) return p.str();
      }
    return "";
  });

  check("basis_change_round_trip", [&]() -> std::string {
    for (const auto& p : parts) {
      const KClassK q = KClassK::of(Basis::Q, p), l = KClassK::of(Basis::L, p);
      if (l_to_q(q_to_l(q)) != q || q_to_l(l_to_q(l)) != l) return p.str();
    }
    return "";
  });

  check("mn_column_orthogonality", [&]() -> std::string {
    for (int n = 0; n <= std::min(size, 6); ++n) {
      const auto ps = partitions_of(n);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          std::int64_t s = 0;
          for (const auto& l : ps) s += mn_trace(a, l) * mn_trace(b, l);
          const BigInt expect = a == b ? centralizer_order(a) : BigInt(0);
          if (BigInt(s) != expect) return a.str() + " " + b.str();
        }
    }
    return "";
  });

  check("lr_symmetry", [&]() -> std::string {
    for (const auto& nu : partitions_up_to(std::min(size, 6)))
      for (int k = 0; k <= nu.size(); ++k)
        for (const auto& l : partitions_of(k))
          for (const auto& m : partitions_of(nu.size() - k)) {
            const auto c = lr_coefficient(l, m, nu);
            if (c != lr_coefficient(m, l, nu) || c != lr_coefficient(transpose(l), transpose(m), transpose(nu)))
              return nu.str();
          }
    return "";
  });

  check("modification_rule", [&]() -> std::string {
    for (const auto& l : partitions_up_to(std::min(size, 4))) {
      const CharPoly X = char_poly_simple(l);
      for (const auto& mu : partitions_up_to(l.first() + l.size() + 2)) {
        const Rational v = eval_char_poly(X, mu);
        const Rational expect = mu.size() >= l.first() + l.size()
                                    ? Rational(mn_trace(mu, with_first(mu.size() - l.size(), l)))
                                    : Rational(modification_value(l, mu));
        if (v != expect) return l.str() + " at " + mu.str();
      }
    }
    return "";
  });

  check("depth_coherence", [&]() -> std::string {
    for (const auto& l : parts)
      for (int D = l.first(); D <= l.first() + 3; ++D) {
        const auto t = local_cohomology(l, D);
        if (l.empty() && D == 0) continue;
        if (!t.min_row() || *t.min_row() != depth(l, D)) return l.str() + " D=" + std::to_string(D);
      }
    return "";
  });

  check("pairing_fourier_symmetry", [&]() -> std::string {
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (Basis x : {Basis::L, Basis::Q})
          for (Basis y : {Basis::L, Basis::Q}) {
            const KClassK u = KClassK::of(x, a), v = KClassK::of(y, b);
            if (pairing(u, v) != pairing(fourier_K(v), fourier_K(u))) return a.str() + " " + b.str();
          }
    return "";
  });

  check("fourier_hilbert", [&]() -> std::string {
    for (const auto& p : parts)
      if (!fourier_hilbert_check(AClass::simple(p), 2 * size + 2) || !fourier_hilbert_check(AClass::free(p), 2 * size + 2))
        return p.str();
    return "";
  });

  check("bgg_exactness", [&]() -> std::string {
    for (const auto& l : partitions_up_to(std::min(size, 5))) {
      const RepComplex C = realize_bgg(l);
      if (!maps_are_morphisms(C)) return l.str() + " (maps)";
      const auto H = complex_cohomology(C);
      if (H[0] != std::map<Partition, int>{{l, 1}}) return l.str() + " (H0)";
      for (std::size_t j = 1; j < H.size(); ++j)
        if (!H[j].empty()) return l.str() + " (H" + std::to_string(j) + ")";
    }
    return "";
  });

  check("tau_contractibility", [&]() -> std::string {
    return tau_contractibility_check(VertexSet::up_to_size(size)) ? "" : "failed";
  });

  return out;
}

}  // namespace tcalab
