#pragma once

#include "tcalab/homalg.hpp"
#include "tcalab/linalg.hpp"
#include "tcalab/partition.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tcalab {

// Finite set of partitions closed downward under i <= j (j/i in HS).
class VertexSet {
 public:
  VertexSet() : VertexSet(std::vector<Partition>{Partition{}}) {}
  explicit VertexSet(std::vector<Partition> verts) : v_(std::move(verts)) {
    std::sort(v_.begin(), v_.end(), [](const Partition& a, const Partition& b) {
      return a.size() != b.size() ? a.size() < b.size() : b < a;
    });
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    for (int i = 0; i < size(); ++i) index_[v_[i]] = i;
    for (const Partition& p : v_)
      for (const Partition& q : remove_strips_all(p, StripKind::HS))
        if (!index_.count(q))
          throw Error(Errc::InvalidInput, "vertex set not downward closed: " + q.str() + " <= " + p.str() + " missing");
    for (int i = 0; i < size(); ++i)
      for (const Partition& q : add_strips(v_[i], 1, StripKind::HS))
        if (auto it = index_.find(q); it != index_.end()) covers_.emplace_back(i, it->second);
  }
  static VertexSet up_to_size(int n) { return VertexSet(partitions_up_to(n)); }

  int size() const { return static_cast<int>(v_.size()); }
  const Partition& at(int i) const { return v_[i]; }
  const std::vector<Partition>& vertices() const { return v_; }
  bool contains(const Partition& p) const { return index_.count(p) > 0; }
  int index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(Errc::VertexMissing, p.str() + " is not a vertex");
    return it->second;
  }
  // Arrows i -> j with v_j / v_i a single box.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  bool leq(int i, int j) const { return is_strip(v_[j], v_[i], StripKind::HS); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.v_ == b.v_; }

 private:
  std::vector<Partition> v_;
  std::map<Partition, int> index_;
  std::vector<std::pair<int, int>> covers_;
};

// Representation of Part_HS with trivial cocycle; only cover arrows are stored.
class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(VertexSet s, std::vector<int> dims) : s_(std::move(s)), dims_(std::move(dims)) {
    if (static_cast<int>(dims_.size()) != s_.size()) throw Error(Errc::InvalidInput, "dimension vector size");
    for (auto [i, j] : s_.covers()) arrows_[{i, j}] = Matrix(dims_[j], dims_[i]);
  }

  const VertexSet& vertices() const { return s_; }
  int dim(int v) const { return dims_[v]; }
  int dim(const Partition& p) const { return s_.contains(p) ? dims_[s_.index(p)] : 0; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }
  const Matrix& cover(int i, int j) const { return arrows_.at({i, j}); }
  void set_cover(int i, int j, Matrix m) {
    auto it = arrows_.find({i, j});
    if (it == arrows_.end()) throw Error(Errc::InvalidInput, "not a cover arrow");
    if (m.rows() != dims_[j] || m.cols() != dims_[i]) throw Error(Errc::InvalidInput, "arrow matrix shape");
    it->second = std::move(m);
  }

  // Arrow i -> k for k/i in HS, composed along the chain that fills the strip row by row.
  Matrix arrow(int i, int k) const {
    if (i == k) return Matrix::identity(dims_[i]);
    const Partition& a = s_.at(i);
    const Partition& b = s_.at(k);
    Matrix m = Matrix::identity(dims_[i]);
    std::vector<int> cur = a.parts();
    cur.resize(b.length(), 0);
    int from = i;
    for (int r = 0; r < b.length(); ++r)
      while (cur[r] < b[r]) {
        ++cur[r];
        const int to = s_.index(Partition(cur));
        m = cover(from, to) * m;
        from = to;
      }
    return m;
  }

  // Composition relations: arrow(j,k) arrow(i,j) is arrow(i,k) when i <= k and 0 otherwise.
  bool satisfies_relations() const {
    const int n = s_.size();
    std::vector<std::vector<int>> up(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != i && s_.leq(i, j)) up[i].push_back(j);
    for (int i = 0; i < n; ++i)
      for (int j : up[i])
        for (int k : up[j]) {
          const Matrix composite = arrow(j, k) * arrow(i, j);
          if (s_.leq(i, k) ? composite != arrow(i, k) : !composite.is_zero()) return false;
        }
    return true;
  }

 private:
  VertexSet s_;
  std::vector<int> dims_;
  std::map<std::pair<int, int>, Matrix> arrows_;
};

using RepMorphism = std::vector<Matrix>;  // one dims2(v) x dims1(v) block per vertex

inline QuiverRep build_simple(const Partition& lam, const VertexSet& S) {
  if (!S.contains(lam)) throw Error(Errc::VertexMissing, lam.str() + " is not a vertex");
  std::vector<int> dims(S.size(), 0);
  dims[S.index(lam)] = 1;
  return QuiverRep(S, dims);
}

inline QuiverRep build_injective(const Partition& lam, const VertexSet& S) {
  std::vector<int> dims(S.size(), 0);
  for (const Partition& nu : remove_strips_all(lam, StripKind::HS)) {
    if (!S.contains(nu)) throw Error(Errc::TruncationTooSmall, nu.str() + " <= " + lam.str() + " is not a vertex");
    dims[S.index(nu)] = 1;
  }
  QuiverRep R(S, dims);
  for (auto [i, j] : S.covers())
    if (dims[i] == 1 && dims[j] == 1) R.set_cover(i, j, Matrix::identity(1));
  return R;
}

inline QuiverRep direct_sum(const std::vector<QuiverRep>& parts, const VertexSet& S) {
  std::vector<int> dims(S.size(), 0);
  for (const QuiverRep& R : parts) {
    if (!(R.vertices() == S)) throw Error(Errc::VertexSetMismatch, "direct_sum over different vertex sets");
    for (int v = 0; v < S.size(); ++v) dims[v] += R.dim(v);
  }
  QuiverRep out(S, dims);
  for (auto [i, j] : S.covers()) {
    Matrix m(dims[j], dims[i]);
    int ri = 0, rj = 0;
    for (const QuiverRep& R : parts) {
      const Matrix& a = R.cover(i, j);
      for (int x = 0; x < a.rows(); ++x)
        for (int y = 0; y < a.cols(); ++y) m(rj + x, ri + y) = a(x, y);
      ri += R.dim(i);
      rj += R.dim(j);
    }
    out.set_cover(i, j, std::move(m));
  }
  return out;
}

inline bool is_morphism(const QuiverRep& R1, const QuiverRep& R2, const RepMorphism& f) {
  const VertexSet& S = R1.vertices();
  if (static_cast<int>(f.size()) != S.size()) return false;
  for (int v = 0; v < S.size(); ++v)
    if (f[v].rows() != R2.dim(v) || f[v].cols() != R1.dim(v)) return false;
  for (auto [i, j] : S.covers())
    if (f[j] * R1.cover(i, j) != R2.cover(i, j) * f[i]) return false;
  return true;
}

struct HomSpace {
  int dimension = 0;
  std::vector<RepMorphism> basis;
};

// Solutions of phi_j A1 = A2 phi_i over all cover arrows i -> j.
inline HomSpace hom_space(const QuiverRep& R1, const QuiverRep& R2) {
  if (!(R1.vertices() == R2.vertices())) throw Error(Errc::VertexSetMismatch, "hom_space over different vertex sets");
  const VertexSet& S = R1.vertices();
  std::vector<int> offset(S.size() + 1, 0);
  for (int v = 0; v < S.size(); ++v) offset[v + 1] = offset[v] + R2.dim(v) * R1.dim(v);
  const int unknowns = offset[S.size()];
  // phi_v(a, b) is unknown offset[v] + a * dim1(v) + b
  auto var = [&](int v, int a, int b) { return offset[v] + a * R1.dim(v) + b; };

  std::vector<std::vector<std::pair<int, Rational>>> eqs;
  for (auto [i, j] : S.covers()) {
    const Matrix& A1 = R1.cover(i, j);
    const Matrix& A2 = R2.cover(i, j);
    for (int a = 0; a < R2.dim(j); ++a)
      for (int b = 0; b < R1.dim(i); ++b) {
        std::vector<std::pair<int, Rational>> row;
        for (int k = 0; k < R1.dim(j); ++k)
          if (A1(k, b) != 0) row.emplace_back(var(j, a, k), A1(k, b));
        for (int k = 0; k < R2.dim(i); ++k)
          if (A2(a, k) != 0) row.emplace_back(var(i, k, b), -A2(a, k));
        if (!row.empty()) eqs.push_back(std::move(row));
      }
  }
  Matrix M(static_cast<int>(eqs.size()), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [c, x] : eqs[r]) M(static_cast<int>(r), c) += x;

  HomSpace h;
  for (const auto& v : nullspace(M)) {
    RepMorphism f;
    for (int w = 0; w < S.size(); ++w) {
      Matrix blk(R2.dim(w), R1.dim(w));
      for (int a = 0; a < R2.dim(w); ++a)
        for (int b = 0; b < R1.dim(w); ++b) blk(a, b) = v[var(w, a, b)];
      f.push_back(std::move(blk));
    }
    h.basis.push_back(std::move(f));
  }
  h.dimension = static_cast<int>(h.basis.size());
  return h;
}

// Vertex v contributes dim of the joint kernel of the arrows leaving it.
inline std::map<Partition, int> socle(const QuiverRep& R) {
  const VertexSet& S = R.vertices();
  std::vector<std::vector<int>> out(S.size());
  for (auto [i, j] : S.covers()) out[i].push_back(j);
  std::map<Partition, int> soc;
  for (int v = 0; v < S.size(); ++v) {
    if (R.dim(v) == 0) continue;
    int rows = 0;
    for (int j : out[v]) rows += R.dim(j);
    Matrix stacked(rows, R.dim(v));
    int r0 = 0;
    for (int j : out[v]) {
      const Matrix& a = R.cover(v, j);
      for (int x = 0; x < a.rows(); ++x)
        for (int y = 0; y < a.cols(); ++y) stacked(r0 + x, y) = a(x, y);
      r0 += a.rows();
    }
    const int k = R.dim(v) - rank(stacked);
    if (k > 0) soc[S.at(v)] = k;
  }
  return soc;
}

// Multiplicity of each simple L_v as a composition factor.
inline std::map<Partition, int> composition_factors(const QuiverRep& R) {
  std::map<Partition, int> m;
  for (int v = 0; v < R.vertices().size(); ++v)
    if (R.dim(v) > 0) m[R.vertices().at(v)] = R.dim(v);
  return m;
}

// The map Q_lam -> Q_mu (mu <= lam) that is c on every vertex in both supports.
inline RepMorphism injective_map(const QuiverRep& Ql, const QuiverRep& Qm, const Rational& c) {
  RepMorphism f;
  for (int v = 0; v < Ql.vertices().size(); ++v) {
    Matrix blk(Qm.dim(v), Ql.dim(v));
    if (Qm.dim(v) == 1 && Ql.dim(v) == 1) blk(0, 0) = c;
    f.push_back(std::move(blk));
  }
  return f;
}

struct RepComplex {
  std::vector<QuiverRep> terms;
  std::vector<RepMorphism> maps;  // maps[j] : terms[j] -> terms[j+1]
};

// Injective resolution of L_lam on the vertex set of partitions of size <= |lam|.
inline RepComplex realize_bgg(const Partition& lam) {
  const InjResolution res = bgg_resolution(lam);
  const VertexSet S = VertexSet::up_to_size(lam.size());
  RepComplex C;
  std::vector<std::vector<QuiverRep>> summands;
  for (const auto& term : res.terms) {
    std::vector<QuiverRep> qs;
    for (const Partition& mu : term) qs.push_back(build_injective(mu, S));
    C.terms.push_back(direct_sum(qs, S));
    summands.push_back(std::move(qs));
  }
  for (std::size_t j = 0; j + 1 < res.terms.size(); ++j) {
    RepMorphism d;
    for (int v = 0; v < S.size(); ++v) {
      Matrix blk(C.terms[j + 1].dim(v), C.terms[j].dim(v));
      int col = 0;
      for (std::size_t a = 0; a < res.terms[j].size(); ++a) {
        if (summands[j][a].dim(v) == 0) continue;
        int row = 0;
        for (std::size_t b = 0; b < res.terms[j + 1].size(); ++b) {
          if (summands[j + 1][b].dim(v) == 0) continue;
          blk(row, col) = res.sign(res.terms[j][a], res.terms[j + 1][b]);
          ++row;
        }
        ++col;
      }
      d.push_back(std::move(blk));
    }
    C.maps.push_back(std::move(d));
  }
  return C;
}

inline bool maps_are_morphisms(const RepComplex& C) {
  for (std::size_t j = 0; j < C.maps.size(); ++j)
    if (!is_morphism(C.terms[j], C.terms[j + 1], C.maps[j])) return false;
  return true;
}

inline bool is_complex(const RepComplex& C) {
  for (std::size_t j = 0; j + 1 < C.maps.size(); ++j)
    for (std::size_t v = 0; v < C.maps[j].size(); ++v)
      if (!(C.maps[j + 1][v] * C.maps[j][v]).is_zero()) return false;
  return true;
}

inline std::vector<std::map<Partition, int>> complex_cohomology(const RepComplex& C) {
  if (!is_complex(C)) throw Error(Errc::NotAComplex, "consecutive maps do not compose to zero");
  std::vector<std::map<Partition, int>> H(C.terms.size());
  for (std::size_t j = 0; j < C.terms.size(); ++j) {
    const QuiverRep& T = C.terms[j];
    for (int v = 0; v < T.vertices().size(); ++v) {
      const int out_rank = j < C.maps.size() ? rank(C.maps[j][v]) : 0;
      const int in_rank = j > 0 ? rank(C.maps[j - 1][v]) : 0;
      const int h = T.dim(v) - out_rank - in_rank;
      if (h != 0) H[j][T.vertices().at(v)] = h;
    }
  }
  return H;
}

struct KernelCokernel {
  std::set<Partition> kernel;
  std::set<Partition> cokernel;
};

inline KernelCokernel kernel_cokernel_constituents(const Partition& lam, const Partition& mu,
                                                   const Rational& c = 1) {
  if (!is_strip(lam, mu, StripKind::HS)) throw Error(Errc::NotHS, lam.str() + "/" + mu.str() + " is not a horizontal strip");
  if (c == 0) throw Error(Errc::ZeroMap, "the zero map has no constituents to compare");
  const VertexSet S = VertexSet::up_to_size(lam.size());
  const QuiverRep Ql = build_injective(lam, S), Qm = build_injective(mu, S);
  const RepMorphism f = injective_map(Ql, Qm, c);
  if (!is_morphism(Ql, Qm, f)) throw Error(Errc::InvariantViolation, "injective_map is not a morphism");
  KernelCokernel kc;
  for (int v = 0; v < S.size(); ++v) {
    const int r = rank(f[v]);
    if (Ql.dim(v) - r > 0) kc.kernel.insert(S.at(v));
    if (Qm.dim(v) - r > 0) kc.cokernel.insert(S.at(v));
  }
  return kc;
}

// tau deletes the first row. Checks: x <= y implies tau(y) <= x, and tau^n(x) reaches the empty partition.
inline bool tau_contractibility_check(const VertexSet& S) {
  for (const Partition& y : S.vertices()) {
    const Partition ty = without_first(y);
    for (const Partition& x : remove_strips_all(y, StripKind::HS))
      if (!is_strip(x, ty, StripKind::HS)) return false;
  }
  for (const Partition& y : S.vertices()) {
    Partition x = y;
    for (int n = 0; n < y.length() && !x.empty(); ++n) x = without_first(x);
    if (!x.empty()) return false;
  }
  return true;
}

}  // namespace tcalab
