#include <gtest/gtest.h>

#include "tcalab/ktheory.hpp"
#include "tcalab/quiver.hpp"

using namespace tcalab;

namespace {

const VertexSet& S5() {
  static const VertexSet s = VertexSet::up_to_size(5);
  return s;
}

std::map<Partition, int> as_counts(const std::vector<Partition>& v) {
  std::map<Partition, int> m;
  for (const Partition& p : v) ++m[p];
  return m;
}

}  // namespace

TEST(VertexSet, DownwardClosed) {
  EXPECT_NO_THROW(VertexSet(std::vector<Partition>{{}, {1}, {2}}));
  EXPECT_THROW(VertexSet(std::vector<Partition>{{}, {2}}), Error);
  const VertexSet s = VertexSet::up_to_size(3);
  EXPECT_EQ(s.size(), 7);
  EXPECT_TRUE(s.leq(s.index({}), s.index({2})));
  EXPECT_FALSE(s.leq(s.index({1}), s.index({1, 1, 1})));
}

TEST(Quiver, SimpleExamples) {
  const QuiverRep L0 = build_simple({}, S5());
  EXPECT_EQ(L0.dim(Partition{}), 1);
  EXPECT_EQ(L0.total_dim(), 1);
  EXPECT_EQ(build_simple({2, 1}, S5()).total_dim(), 1);
  EXPECT_THROW(build_simple({3, 3}, S5()), Error);
  try {
    build_simple({6}, S5());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexMissing);
  }
}

TEST(Quiver, InjectiveExamples) {
  const QuiverRep Q0 = build_injective({}, S5());
  EXPECT_EQ(Q0.total_dim(), 1);
  const QuiverRep Q1 = build_injective({1}, S5());
  EXPECT_EQ(Q1.dim(Partition{}), 1);
  EXPECT_EQ(Q1.dim(Partition{1}), 1);
  EXPECT_EQ(Q1.total_dim(), 2);
  for (const auto& l : partitions_up_to(5))
    EXPECT_EQ(build_injective(l, S5()).total_dim(), static_cast<int>(remove_strips_all(l, StripKind::HS).size()));
  try {
    build_injective({4, 2}, S5());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TruncationTooSmall);
  }
}

TEST(Quiver, ConstructedRepsSatisfyRelations) {
  const VertexSet S = VertexSet::up_to_size(4);
  for (const auto& l : partitions_up_to(4)) {
    EXPECT_TRUE(build_injective(l, S).satisfies_relations()) << l.str();
    EXPECT_TRUE(build_simple(l, S).satisfies_relations());
  }
  EXPECT_TRUE(direct_sum({build_injective({2, 1}, S), build_injective({2}, S)}, S).satisfies_relations());
  // A broken square: the path through (2) is the identity, the path through (1,1) is zero.
  std::vector<int> dims(S.size(), 0);
  for (const Partition& p : std::vector<Partition>{{1}, {2}, {1, 1}, {2, 1}}) dims[S.index(p)] = 1;
  QuiverRep bad(S, dims);
  bad.set_cover(S.index({1}), S.index({2}), Matrix::identity(1));
  bad.set_cover(S.index({2}), S.index({2, 1}), Matrix::identity(1));
  bad.set_cover(S.index({1}), S.index({1, 1}), Matrix::identity(1));
  EXPECT_FALSE(bad.satisfies_relations());
}

TEST(Quiver, HomBetweenInjectives) {
  EXPECT_EQ(hom_space(build_injective({2}, S5()), build_injective({1}, S5())).dimension, 1);
  EXPECT_EQ(hom_space(build_injective({1}, S5()), build_injective({2}, S5())).dimension, 0);
  const auto parts = partitions_up_to(5);
  std::map<Partition, QuiverRep> Q;
  for (const auto& p : parts) Q.emplace(p, build_injective(p, S5()));
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const HomSpace h = hom_space(Q.at(a), Q.at(b));
      EXPECT_EQ(h.dimension, is_strip(a, b, StripKind::HS) ? 1 : 0) << a.str() << " -> " << b.str();
      for (const RepMorphism& f : h.basis) EXPECT_TRUE(is_morphism(Q.at(a), Q.at(b), f));
    }
}

TEST(Quiver, HomFromSimples) {
  const auto parts = partitions_up_to(4);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      EXPECT_EQ(hom_space(build_simple(a, S5()), build_injective(b, S5())).dimension, a == b ? 1 : 0);
      EXPECT_EQ(hom_space(build_simple(a, S5()), build_simple(b, S5())).dimension, a == b ? 1 : 0);
    }
  EXPECT_THROW(hom_space(build_simple({}, S5()), build_simple({}, VertexSet::up_to_size(2))), Error);
}

TEST(Quiver, Socles) {
  for (const auto& l : partitions_up_to(5)) {
    EXPECT_EQ(socle(build_injective(l, S5())), (std::map<Partition, int>{{l, 1}})) << l.str();
    EXPECT_EQ(socle(build_simple(l, S5())), (std::map<Partition, int>{{l, 1}}));
  }
  const QuiverRep sum = direct_sum({build_injective({2, 1}, S5()), build_injective({3}, S5())}, S5());
  EXPECT_EQ(socle(sum), (std::map<Partition, int>{{{2, 1}, 1}, {{3}, 1}}));
}

TEST(Quiver, CompositionFactorsOfInjectives) {
  for (const auto& l : partitions_up_to(5)) {
    const PartitionComb c = q_to_l(KClassK::of(Basis::Q, l)).coeffs;
    std::map<Partition, int> expect;
    for (const auto& [p, m] : c.terms()) expect[p] = static_cast<int>(m);
    EXPECT_EQ(composition_factors(build_injective(l, S5())), expect) << l.str();
  }
}

TEST(Quiver, NonzeroSubrepsOfInjectivesMeetTheSocle) {
  // Any subrepresentation generated at a vertex nu of Q_lam contains the top vertex lam.
  for (const auto& l : partitions_up_to(4)) {
    const QuiverRep Q = build_injective(l, S5());
    const int top = S5().index(l);
    for (const Partition& nu : remove_strips_all(l, StripKind::HS)) {
      const int v = S5().index(nu);
      EXPECT_TRUE(S5().leq(v, top));
      EXPECT_EQ(rank(Q.arrow(v, top)), 1) << l.str() << " from " << nu.str();
    }
  }
}

TEST(Bgg, RealizationExamples) {
  const RepComplex c1 = realize_bgg({1});
  EXPECT_EQ(c1.terms.size(), 2u);
  EXPECT_EQ(complex_cohomology(c1), (std::vector<std::map<Partition, int>>{{{{1}, 1}}, {}}));
  const RepComplex c11 = realize_bgg({1, 1});
  EXPECT_EQ(complex_cohomology(c11), (std::vector<std::map<Partition, int>>{{{{1, 1}, 1}}, {}, {}}));
  EXPECT_EQ(complex_cohomology(realize_bgg({2, 1}))[0], (std::map<Partition, int>{{{2, 1}, 1}}));
}

TEST(Bgg, RealizationIsAnInjectiveResolution) {
  for (const auto& l : partitions_up_to(5)) {
    const RepComplex C = realize_bgg(l);
    ASSERT_TRUE(maps_are_morphisms(C)) << l.str();
    ASSERT_TRUE(is_complex(C)) << l.str();
    const auto H = complex_cohomology(C);
    ASSERT_EQ(H.size(), static_cast<std::size_t>(l.length() + 1));
    EXPECT_EQ(H[0], (std::map<Partition, int>{{l, 1}})) << l.str();
    for (std::size_t j = 1; j < H.size(); ++j) EXPECT_TRUE(H[j].empty()) << l.str() << " degree " << j;
  }
}

TEST(Bgg, UnsignedMapsAreNotAComplex) {
  RepComplex C = realize_bgg({2, 1});
  for (auto& d : C.maps)
    for (auto& blk : d)
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j)
          if (blk(i, j) != 0) blk(i, j) = 1;
  EXPECT_FALSE(is_complex(C));
  try {
    complex_cohomology(C);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAComplex);
  }
}

TEST(Cohomology, ZeroAndIdentityComplexes) {
  const VertexSet S = VertexSet::up_to_size(3);
  RepComplex zero;
  zero.terms = {QuiverRep(S, std::vector<int>(S.size(), 0))};
  EXPECT_EQ(complex_cohomology(zero), (std::vector<std::map<Partition, int>>{{}}));
  for (const auto& l : partitions_up_to(3)) {
    const QuiverRep Q = build_injective(l, S);
    RepComplex id;
    id.terms = {Q, Q};
    RepMorphism f;
    for (int v = 0; v < S.size(); ++v) f.push_back(Matrix::identity(Q.dim(v)));
    id.maps = {f};
    const auto H = complex_cohomology(id);
    EXPECT_TRUE(H[0].empty());
    EXPECT_TRUE(H[1].empty());
  }
}

TEST(KernelCokernel, Examples) {
  const KernelCokernel a = kernel_cokernel_constituents({1}, {});
  EXPECT_EQ(a.kernel, (std::set<Partition>{{1}}));
  EXPECT_TRUE(a.cokernel.empty());
  const KernelCokernel b = kernel_cokernel_constituents({2}, {1});
  EXPECT_EQ(b.kernel, (std::set<Partition>{{2}}));
  EXPECT_TRUE(b.cokernel.empty());
  const KernelCokernel c = kernel_cokernel_constituents({2, 1}, {1});
  EXPECT_EQ(c.kernel, (std::set<Partition>{{2, 1}, {1, 1}, {2}}));
  // (2,1) has no horizontal strip of size 3, so L_0 survives in the cokernel.
  EXPECT_EQ(c.cokernel, (std::set<Partition>{{}}));
}

TEST(KernelCokernel, MatchesSetDifference) {
  for (const auto& l : partitions_up_to(5))
    for (const Partition& m : remove_strips_all(l, StripKind::HS)) {
      const auto Rl = remove_strips_all(l, StripKind::HS), Rm = remove_strips_all(m, StripKind::HS);
      std::set<Partition> ker, cok;
      const std::set<Partition> sl(Rl.begin(), Rl.end()), sm(Rm.begin(), Rm.end());
      for (const Partition& p : sl)
        if (!sm.count(p)) ker.insert(p);
      for (const Partition& p : sm)
        if (!sl.count(p)) cok.insert(p);
      const KernelCokernel kc = kernel_cokernel_constituents(l, m, Rational(-2, 3));
      EXPECT_EQ(kc.kernel, ker) << l.str() << " -> " << m.str();
      EXPECT_EQ(kc.cokernel, cok);
    }
}

TEST(KernelCokernel, Errors) {
  try {
    kernel_cokernel_constituents({1, 1}, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotHS);
  }
  try {
    kernel_cokernel_constituents({2}, {1}, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroMap);
  }
}

TEST(Tau, Contractibility) {
  EXPECT_TRUE(tau_contractibility_check(VertexSet()));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(tau_contractibility_check(VertexSet::up_to_size(n)));
  EXPECT_TRUE(tau_contractibility_check(VertexSet(std::vector<Partition>{{}, {1}, {2}, {3}, {1, 1}})));
}

TEST(Quiver, InjectivePairingIsHomDimension) {
  const auto parts = partitions_up_to(4);
  for (const auto& a : parts)
    for (const auto& b : parts)
      EXPECT_EQ(pairing(KClassK::of(Basis::Q, a), KClassK::of(Basis::Q, b)),
                hom_space(build_injective(a, S5()), build_injective(b, S5())).dimension)
          << a.str() << " " << b.str();
}

TEST(Quiver, SimpleMultiplicitiesAgreeWithCounts) {
  std::vector<Partition> all;
  for (const auto& l : partitions_up_to(3))
    for (const Partition& p : remove_strips_all(l, StripKind::HS)) all.push_back(p);
  std::vector<QuiverRep> qs;
  for (const auto& l : partitions_up_to(3)) qs.push_back(build_injective(l, S5()));
  EXPECT_EQ(composition_factors(direct_sum(qs, S5())), as_counts(all));
}
