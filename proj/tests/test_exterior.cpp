#include <gtest/gtest.h>

#include "bornforge/catalog.hpp"
#include "support.hpp"

using namespace bornforge;
namespace bt = bornforge::testing;
using bt::Rng;

namespace {

KForm mono(std::size_t n, IndexTuple idx, const Rational& c = 1) { return KForm::monomial(n, std::move(idx), c); }

KForm random_form(Rng& rng, std::size_t n, std::size_t k) {
  KForm f(k, n);
  for (const auto& idx : subsets(n, k))
    if (bt::uniform(rng, 0, 2) == 0) f.add(idx, bt::random_rational(rng));
  return f;
}

}  // namespace

TEST(Wedge, OneFormsGiveTheirProduct) {
  EXPECT_EQ(wedge(mono(4, {0}), mono(4, {1})), mono(4, {0, 1}));
  EXPECT_EQ(wedge(mono(4, {1}), mono(4, {0})), mono(4, {0, 1}, -1));
}

TEST(Wedge, RepeatedIndexVanishes) { EXPECT_TRUE(wedge(mono(4, {0, 1}), mono(4, {0, 2})).is_zero()); }

TEST(Wedge, SymplecticSquare) {
  KForm w = mono(4, {0, 1}) + mono(4, {2, 3});
  EXPECT_EQ(wedge(w, w), mono(4, {0, 1, 2, 3}, 2));
}

TEST(Wedge, DegreeBeyondDimensionIsZero) {
  EXPECT_TRUE(wedge(mono(3, {0, 1}), mono(3, {1, 2})).is_zero());
  EXPECT_TRUE(wedge(mono(2, {0, 1}), mono(2, {0})).is_zero());
}

TEST(Differential, HeisenbergTopCovector) {
  EXPECT_EQ(ce_d(heisenberg3(), mono(3, {2})), mono(3, {0, 1}));
  EXPECT_TRUE(ce_d(heisenberg3(), mono(3, {0})).is_zero());
}

TEST(Differential, AbelianAlgebraIsZero) {
  Rng rng(301);
  LieAlgebra l(5);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_TRUE(ce_d(l, random_form(rng, 5, k)).is_zero());
}

TEST(Differential, SumEntry) {
  EXPECT_EQ(ce_d(entry("h13").algebra, mono(6, {4})), mono(6, {0, 2}) + mono(6, {0, 3}));
}

TEST(Differential, MatchesSalamonEntriesOnCatalog) {
  // d e^k reads back the k-th Salamon entry.
  for (const auto& e : catalog()) {
    const auto& l = e.algebra;
    for (std::size_t k = 0; k < l.dim(); ++k) EXPECT_EQ(d_one_form(l, k), ce_d(l, mono(l.dim(), {k}))) << e.name;
  }
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti(LieAlgebra(6), 2), 15u);
  EXPECT_EQ(betti(entry("h7").algebra, 2), 8u);
  EXPECT_EQ(betti(entry("h9").algebra, 3), 8u);
  EXPECT_EQ(betti(heisenberg3(), 0), 1u);
  EXPECT_THROW(betti(heisenberg3(), 4), ContractError);
}

TEST(Nu2, Examples) {
  EXPECT_EQ(nu2(LieAlgebra(6)), 0u);
  EXPECT_EQ(nu2(entry("h5").algebra), 0u);
  EXPECT_EQ(nu2(entry("h10").algebra), 3u);
  EXPECT_EQ(nu2(entry("h8").algebra), 1u);
}

TEST(Nu2, GridSearchAgreesOnSixDimensionalCatalog) {
  for (const auto& e : catalog()) {
    if (e.algebra.dim() != 6) continue;
    auto exact = try_nu2(e.algebra);
    ASSERT_TRUE(exact) << e.name;
    EXPECT_EQ(*exact, nu2_grid_search(e.algebra)) << e.name;
  }
}

TEST(Nu2, TooManyExactFormsIsUnsupported) {
  // Free 2-step nilpotent on three generators plus a 4-dim image: m = 4.
  LieAlgebra l = parse_salamon("(0,0,0,0,12,13,14,23)");
  EXPECT_THROW(nu2(l), UnsupportedError);
}

TEST(Decomposable, Examples) {
  EXPECT_TRUE(is_decomposable(mono(4, {0, 1})));
  EXPECT_FALSE(is_decomposable(mono(4, {0, 1}) + mono(4, {2, 3})));
  EXPECT_TRUE(is_decomposable(mono(4, {0, 2}) + mono(4, {0, 3})));
}

TEST(KFormContract, IndexOutOfRange) { EXPECT_THROW(mono(3, {0, 3}), ContractError); }

// Properties

TEST(ExteriorProperty, DSquaredVanishesOnCatalog) {
  Rng rng(302);
  int instances = 0;
  for (int trial = 0; trial < 25; ++trial)
    for (const auto& e : catalog()) {
      const auto& l = e.algebra;
      LieAlgebra m = trial == 0 ? l : l.change_basis(bt::random_invertible(rng, l.dim()));
      for (std::size_t k = 0; k + 2 <= m.dim(); ++k) {
        EXPECT_TRUE(ce_d(m, ce_d(m, random_form(rng, m.dim(), k))).is_zero()) << e.name << " degree " << k;
        ++instances;
      }
    }
  EXPECT_GE(instances, 200);
}

TEST(ExteriorProperty, DifferentialIsALinearMapMatchingItsMatrix) {
  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& l = catalog()[trial % catalog().size()].algebra;
    std::size_t k = bt::uniform(rng, 0, static_cast<long>(l.dim()) - 1);
    KForm a = random_form(rng, l.dim(), k);
    EXPECT_EQ(from_vector(l.dim(), k + 1, d_matrix(l, k) * to_vector(a)), ce_d(l, a));
  }
}

TEST(ExteriorProperty, FirstBettiNumberIsCodimensionOfDerivedAlgebra) {
  Rng rng(304);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& l0 = catalog()[trial % catalog().size()].algebra;
    LieAlgebra l = l0.change_basis(bt::random_invertible(rng, l0.dim()));
    EXPECT_EQ(betti(l, 1), l.dim() - derived_algebra(l).dim());
  }
}

TEST(ExteriorProperty, PoincareDualityOnNilpotentCatalog) {
  for (const auto& e : catalog()) {
    if (!nil_step(e.algebra)) continue;
    const std::size_t n = e.algebra.dim();
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(betti(e.algebra, k), betti(e.algebra, n - k)) << e.name;
  }
}

TEST(ExteriorProperty, Nu2IsBoundedAndBasisInvariant) {
  Rng rng(305);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial)
    for (const auto& e : catalog()) {
      auto base = try_nu2(e.algebra);
      if (!base) continue;
      LieAlgebra m = e.algebra.change_basis(bt::random_invertible(rng, e.algebra.dim()));
      EXPECT_EQ(nu2(m), *base) << e.name;
      EXPECT_LE(*base, exact_two_forms(m).size());
      ++checked;
    }
  EXPECT_GE(checked, 200);
}
