#include <gtest/gtest.h>

#include "bornforge/geometry.hpp"
#include "support.hpp"

using namespace bornforge;
namespace bt = bornforge::testing;
using bt::Rng;

namespace {

Matrix col(std::initializer_list<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return Matrix::column(r);
}

}  // namespace

TEST(Rational, StaysInLowestTerms) {
  Rational r = frac(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(frac(4, 2)), "2");
  EXPECT_THROW(frac(1, 0), ContractError);
}

TEST(Rational, ParsesExactText) {
  EXPECT_EQ(parse_rational("3/2"), frac(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), frac(-7));
  EXPECT_EQ(parse_rational("-10/4"), frac(-5, 2));
  EXPECT_THROW(parse_rational("10/-4"), ContractError);
  EXPECT_THROW(parse_rational("1.5"), ContractError);
  EXPECT_THROW(parse_rational("1/0"), ContractError);
  EXPECT_THROW(parse_rational(""), ContractError);
}

TEST(Rational, LargeProductsDoNotOverflow) {
  Rational r = 1;
  for (int i = 0; i < 40; ++i) r *= frac(1000003, 7);
  for (int i = 0; i < 40; ++i) r /= frac(1000003, 7);
  EXPECT_EQ(r, 1);
}

TEST(SolveLinear, IdentitySystem) {
  auto x = solve_linear(Matrix::identity(3), col({1, 2, 3}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, col({1, 2, 3}));
}

TEST(SolveLinear, InconsistentRankOneSystem) {
  EXPECT_FALSE(solve_linear(Matrix{{1, 1}, {1, 1}}, col({1, 2})));
}

TEST(SolveLinear, DiagonalSystem) {
  auto x = solve_linear(Matrix{{2, 0}, {0, 4}}, col({1, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, Matrix::column({frac(1, 2), frac(1, 4)}));
}

TEST(SolveLinear, UnderdeterminedSetsFreeVariablesToZero) {
  auto x = solve_linear(Matrix{{1, 1, 0}}, col({5}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, col({5, 0, 0}));
}

TEST(SolveLinear, DimensionMismatchIsContractViolation) {
  EXPECT_THROW(solve_linear(Matrix::identity(2), col({1, 2, 3})), ContractError);
}

TEST(Kernel, InjectiveMapHasEmptyKernel) { EXPECT_TRUE(kernel(Matrix::identity(4)).empty()); }

TEST(Kernel, ZeroMapHasFullKernel) { EXPECT_EQ(kernel(Matrix(2, 2)).size(), 2u); }

TEST(Kernel, RowVectorKernelIsAntidiagonal) {
  auto k = kernel(Matrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(k[0][0] + k[0][1]));
  EXPECT_FALSE(k[0].is_zero());
}

TEST(Inverse, SingularMatrixThrows) {
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
  EXPECT_EQ(determinant(Matrix{{1, 2}, {3, 4}}), -2);
}

TEST(Signature, IdentityIsPositiveDefinite) {
  EXPECT_EQ(signature_of_symmetric(Matrix::identity(4)), (Signature{4, 0, 0}));
}

TEST(Signature, HyperbolicPairsAreNeutral) {
  Matrix s = sym_pair(4, 0, 2) + sym_pair(4, 1, 3);
  EXPECT_EQ(signature_of_symmetric(s), (Signature{2, 2, 0}));
  EXPECT_EQ(bt::oracle_signature(s), (Signature{2, 2, 0}));
}

TEST(Signature, FlatHeisenbergMetricIsLorentzian) {
  Matrix s{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}};
  EXPECT_EQ(signature_of_symmetric(s), (Signature{2, 1, 0}));
  EXPECT_EQ(bt::oracle_signature(s), (Signature{2, 1, 0}));
}

TEST(Signature, CountsDegenerateDirections) {
  EXPECT_EQ(signature_of_symmetric(Matrix::diagonal({0, -2, 3, 0})), (Signature{1, 1, 2}));
}

TEST(Signature, RejectsNonSymmetricInput) {
  EXPECT_THROW(signature_of_symmetric(Matrix{{0, 1}, {0, 0}}), ContractError);
}

// Properties

TEST(LinalgProperty, KernelVectorsAreAnnihilated) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = bt::uniform(rng, 1, 5), c = bt::uniform(rng, 1, 6);
    Matrix a = bt::random_matrix(rng, r, c, 2);
    if (trial % 3 == 0) a.set_col(c - 1, a.col(0));  // force a dependency
    auto k = kernel(a);
    for (const auto& v : k) EXPECT_TRUE((a * v).is_zero());
    EXPECT_EQ(k.size() + rank(a), c);
  }
}

TEST(LinalgProperty, SolveReproducesRightHandSide) {
  Rng rng(102);
  int consistent = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = bt::uniform(rng, 1, 4), c = bt::uniform(rng, 1, 4);
    Matrix a = bt::random_matrix(rng, r, c, 3, 2);
    Matrix b = trial % 2 ? a * bt::random_matrix(rng, c, 1, 3, 3) : bt::random_matrix(rng, r, 1, 3, 3);
    auto x = solve_linear(a, b);
    if (trial % 2) ASSERT_TRUE(x);
    if (x) {
      ++consistent;
      EXPECT_EQ(a * *x, b);
    } else {
      // Inconsistent: b is outside the column space.
      EXPECT_GT(rank(Matrix::from_columns({a, b})), rank(a));
    }
  }
  EXPECT_GE(consistent, 500);
}

TEST(LinalgProperty, SignatureIsCongruenceInvariant) {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = bt::uniform(rng, 1, 6);
    Matrix s = bt::random_symmetric(rng, n, 2);
    Matrix p = bt::random_invertible(rng, n);
    Signature sig = signature_of_symmetric(s);
    EXPECT_EQ(signature_of_symmetric(p.transpose() * s * p), sig);
    EXPECT_EQ(sig, bt::oracle_signature(s));
    EXPECT_EQ(sig.positive + sig.negative + sig.zero, n);
  }
}

TEST(LinalgProperty, InverseIsTwoSided) {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = bt::uniform(rng, 1, 6);
    Matrix p = bt::random_invertible(rng, n);
    EXPECT_EQ(p * inverse(p), Matrix::identity(n));
    EXPECT_EQ(inverse(p) * p, Matrix::identity(n));
    EXPECT_EQ(determinant(p) * determinant(inverse(p)), 1);
  }
}
