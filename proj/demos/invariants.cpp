// Walks through the invariants of L_lam^{>=D} for a few small shapes.
#include "tcalab/tcalab.hpp"

#include <iostream>

using namespace tcalab;

int main() {
  for (const Partition& lam : std::vector<Partition>{{1}, {2}, {2, 1}, {3, 1}}) {
    std::cout << "lambda = " << lam << "\n";
    std::cout << "  X = " << char_poly_simple(lam).poly.str() << "\n";
    for (int D = lam.first(); D <= lam.first() + 1; ++D) {
      const LocalCohomologyTable t = local_cohomology(lam, D);
      std::cout << "  D = " << D << ", depth " << depth(lam, D) << ":";
      for (const auto& [i, row] : t.rows) {
        std::cout << " H^" << i << " =";
        for (const Partition& p : row) std::cout << " " << p;
      }
      std::cout << "\n";
    }
    const InjResolution r = bgg_resolution(lam);
    std::cout << "  injective dimension " << r.length() << "\n";
  }

  // M(0, 2): the Poincare series is (1 - 1/q) + (t + 1/q) e^{-qt}.
  const PoincareTruncation P = poincare_truncated(efw_resolution({}, 2, 6), 6);
  std::cout << "P_M(0,2) through t^6:\n";
  for (const auto& [k, c] : P.coeffs) std::cout << "  t^" << k.first << " q^" << k.second << "  " << to_string(c) << "\n";
}
