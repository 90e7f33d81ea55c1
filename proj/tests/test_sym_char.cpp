#include <gtest/gtest.h>

#include "tcalab/sym_char.hpp"

#include <functional>
#include <map>
#include <random>

using namespace tcalab;

namespace {

// Fixed points of a permutation of cycle type mu on row-tabloids of shape lam:
// ways to drop each cycle into a row so that row i receives exactly lam_i points.
long permutation_character(const Partition& lam, const Partition& mu) {
  std::vector<int> room = lam.parts();
  std::function<long(int)> rec = [&](int k) -> long {
    if (k == mu.length()) return 1;
    long s = 0;
    for (auto& r : room)
      if (r >= mu[k]) {
        r -= mu[k];
        s += rec(k + 1);
        r += mu[k];
      }
    return s;
  };
  return rec(0);
}

// Semistandard tableaux of shape nu and content lam, by filling rows with a weakly
// increasing word and checking columns afterwards.
long kostka(const Partition& nu, const Partition& lam) {
  if (nu.size() != lam.size()) return 0;
  std::vector<std::vector<int>> T(nu.length());
  for (int i = 0; i < nu.length(); ++i) T[i].assign(nu[i], 0);
  std::vector<int> left = lam.parts();
  std::function<long(int, int)> rec = [&](int r, int c) -> long {
    if (r == nu.length()) return 1;
    if (c == nu[r]) return rec(r + 1, 0);
    long s = 0;
    const int lo = c > 0 ? T[r][c - 1] : 1;
    for (int v = lo; v <= lam.length(); ++v) {
      if (left[v - 1] == 0) continue;
      if (r > 0 && T[r - 1][c] >= v) continue;
      T[r][c] = v;
      --left[v - 1];
      s += rec(r, c + 1);
      ++left[v - 1];
    }
    T[r][c] = 0;
    return s;
  };
  return rec(0, 0);
}

// chi^lam from Young's rule: pi^lam = sum_{nu >= lam} K_{nu,lam} chi^nu, solved top-down in dominance-compatible lex order.
std::map<std::pair<Partition, Partition>, long> young_table(int n) {
  std::map<std::pair<Partition, Partition>, long> chi;
  const auto ps = partitions_of(n);  // lex descending
  for (const auto& lam : ps)
    for (const auto& mu : ps) {
      long v = permutation_character(lam, mu);
      for (const auto& nu : ps) {
        if (!(lam < nu)) continue;
        v -= kostka(nu, lam) * chi.at({nu, mu});
      }
      chi[{lam, mu}] = v;
    }
  return chi;
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(v);
}

// c^nu_{lam,mu} = sum_{rho, sigma} chi^lam(rho) chi^mu(sigma) chi^nu(rho u sigma) / (z_rho z_sigma)
Rational lr_by_characters(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (nu.size() != lam.size() + mu.size()) return 0;
  Rational s = 0;
  for (const auto& rho : partitions_of(lam.size()))
    for (const auto& sigma : partitions_of(mu.size()))
      s += Rational(mn_trace(rho, lam) * mn_trace(sigma, mu) * mn_trace(join(rho, sigma), nu)) /
           Rational(centralizer_order(rho) * centralizer_order(sigma));
  return s;
}

VClass random_class(std::mt19937& rng, int max_size) {
  const auto ps = partitions_up_to(max_size);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  VClass x;
  for (int k = 0; k < 3; ++k) x.add(ps[pick(rng)], coef(rng));
  return x;
}

}  // namespace

TEST(SymChar, TraceExamples) {
  EXPECT_EQ(mn_trace({1, 1}, {2}), 1);
  EXPECT_EQ(mn_trace({2}, {1, 1}), -1);
  EXPECT_EQ(mn_trace({2, 1}, {2, 1}), 0);
  EXPECT_EQ(mn_trace({}, {}), 1);
  EXPECT_THROW(mn_trace({2}, {1}), Error);
}

TEST(SymChar, StandardRepresentationOfS3) {
  // Explicit 2x2 matrices of the standard representation: permutations act on
  // {x in Q^3 : sum x = 0} with basis e1-e2, e2-e3.
  // Transposition (12): e1-e2 -> -(e1-e2), e2-e3 -> e1-e3 = (e1-e2)+(e2-e3); trace 0.
  // 3-cycle (123): e1-e2 -> e2-e3, e2-e3 -> e3-e1 = -(e1-e2)-(e2-e3); trace -1.
  EXPECT_EQ(mn_trace({1, 1, 1}, {2, 1}), 2);
  EXPECT_EQ(mn_trace({2, 1}, {2, 1}), 0);
  EXPECT_EQ(mn_trace({3}, {2, 1}), -1);
}

TEST(SymChar, TraceMatchesYoungRule) {
  for (int n = 0; n <= 7; ++n) {
    const auto chi = young_table(n);
    for (const auto& [k, v] : chi) EXPECT_EQ(mn_trace(k.second, k.first), v) << k.first.str() << " at " << k.second.str();
  }
}

TEST(SymChar, ColumnOrthogonality) {
  for (int n = 0; n <= 6; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        long s = 0;
        for (const auto& l : ps) s += mn_trace(a, l) * mn_trace(b, l);
        EXPECT_EQ(BigInt(s), a == b ? centralizer_order(a) : BigInt(0));
      }
  }
}

TEST(SymChar, IdentityTraceIsDimension) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : partitions_of(n))
      EXPECT_EQ(BigInt(mn_trace(Partition(std::vector<int>(n, 1)), l)), hook_dimension(l));
}

TEST(SymChar, TransposeTwistsBySign) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      int even = 0;
      for (int x : mu.parts()) even += x % 2 == 0;
      EXPECT_EQ(sign_character(mu), even % 2 ? -1 : 1);
      for (const auto& l : partitions_of(n)) EXPECT_EQ(mn_trace(mu, transpose(l)), sign_character(mu) * mn_trace(mu, l));
    }
}

TEST(SymChar, TraceOfLargePartitionIsFast) {
  // The memo keeps |lambda| = 12 well inside test budgets.
  long s = 0;
  for (const auto& l : partitions_of(12)) s += mn_trace({3, 3, 2, 2, 1, 1}, l) * mn_trace({3, 3, 2, 2, 1, 1}, l);
  EXPECT_EQ(BigInt(s), centralizer_order({3, 3, 2, 2, 1, 1}));
}

TEST(SymChar, LrExamples) {
  for (const auto& l : partitions_up_to(5)) EXPECT_EQ(lr_coefficient(l, {}, l), 1);
  EXPECT_EQ(lr_coefficient({1}, {1, 1}, {2, 1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({2}, {2}, {3}), 0);
  EXPECT_EQ(lr_coefficient({3}, {1}, {2, 2}), 0);
}

TEST(SymChar, LrMatchesCharacterFormula) {
  for (const auto& nu : partitions_up_to(7))
    for (int k = 0; k <= nu.size(); ++k)
      for (const auto& l : partitions_of(k))
        for (const auto& m : partitions_of(nu.size() - k))
          EXPECT_EQ(Rational(lr_coefficient(l, m, nu)), lr_by_characters(l, m, nu))
              << l.str() << " " << m.str() << " " << nu.str();
}

TEST(SymChar, LrSymmetries) {
  for (const auto& nu : partitions_up_to(7))
    for (int k = 0; k <= nu.size(); ++k)
      for (const auto& l : partitions_of(k))
        for (const auto& m : partitions_of(nu.size() - k)) {
          const auto c = lr_coefficient(l, m, nu);
          EXPECT_EQ(c, lr_coefficient(m, l, nu));
          EXPECT_EQ(c, lr_coefficient(transpose(l), transpose(m), transpose(nu)));
        }
}

TEST(SymChar, SchurProductExamples) {
  EXPECT_EQ(schur_product(VClass{{{1}, 1}}, VClass{{{1}, 1}}), (VClass{{{2}, 1}, {{1, 1}, 1}}));
  const VClass x{{{2, 1}, 3}, {{1}, -1}};
  EXPECT_EQ(schur_product(x, VClass{{{}, 1}}), x);
  EXPECT_EQ(schur_product(VClass{{{2}, 1}}, VClass{{{1, 1}, 1}}), (VClass{{{3, 1}, 1}, {{2, 1, 1}, 1}}));
}

TEST(SymChar, SchurProductRingLaws) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const VClass a = random_class(rng, 4), b = random_class(rng, 4), c = random_class(rng, 3);
    EXPECT_EQ(schur_product(a, b), schur_product(b, a));
    EXPECT_EQ(schur_product(schur_product(a, b), c), schur_product(a, schur_product(b, c)));
  }
}

TEST(SymChar, PieriClass) {
  EXPECT_EQ(pieri_class({1}, 1, StripKind::HS), (VClass{{{2}, 1}, {{1, 1}, 1}}));
  for (int k = 0; k <= 5; ++k)
    EXPECT_EQ(pieri_class({}, k, StripKind::HS), VClass::basis(Partition(std::vector<int>(k ? 1 : 0, k))));
  for (const auto& l : partitions_up_to(5))
    for (int d = 0; d <= 4; ++d) {
      const Partition row(std::vector<int>(d ? 1 : 0, d)), col(std::vector<int>(d, 1));
      EXPECT_EQ(pieri_class(l, d, StripKind::HS), schur_product(l, row));
      EXPECT_EQ(pieri_class(l, d, StripKind::VS), schur_product(l, col));
    }
}
