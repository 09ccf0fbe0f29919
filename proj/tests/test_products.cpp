#include <gtest/gtest.h>

#include "bornforge/commands.hpp"
#include "support.hpp"

using namespace bornforge;
namespace bt = bornforge::testing;
using bt::Rng;

namespace {

const LieAlgebra R3(3, "R3");

BicrossData trivial(const LieAlgebra& plus, const LieAlgebra& minus, const BilinearForm& h) {
  const std::size_t n = plus.dim();
  return {plus, minus, h, Matrix::identity(n), Representation::zero(n, n), Representation::zero(n, n)};
}

std::string validation_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "no error";
}

std::string identify_product(const BicrossData& d) { return identify_born(bicross(d).algebra).describe(); }

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial cst(std::size_t n, const Rational& c) { return Polynomial::constant(n, c); }

}  // namespace

TEST(Compatibility, ZeroActionsAlwaysCompatible) {
  EXPECT_TRUE(check_compatibility(trivial(heisenberg3(), heisenberg3(), heis3_metric(1))).holds);
  EXPECT_TRUE(check_compatibility(trivial(R3, heisenberg3(), heis3_metric(2))).holds);
}

TEST(Compatibility, ActionByDerivationsIsCompatible) {
  Rng rng(601);
  auto der = derivations(heisenberg3());
  // φ(e3) = 0 and φ(e1), φ(e2) commuting multiples of one derivation: a representation of R³ by derivations.
  Matrix d = der[0] + der[3];
  BicrossData data{heisenberg3(), R3, bt::random_metric(rng, 3), Matrix::identity(3), {{d, 2 * d, Matrix(3, 3)}},
                   Representation::zero(3, 3)};
  EXPECT_TRUE(check_compatibility(data).holds);
}

TEST(Compatibility, FamilyPointIsCompatible) { EXPECT_TRUE(check_compatibility(family_r3_heis3(1, 1, 0, 0)).holds); }

TEST(Compatibility, FailureNamesIdentityAndTriple) {
  // φ(e1) = E11 is not a derivation of heis3.
  Matrix m(3, 3);
  m(0, 0) = 1;
  BicrossData data{heisenberg3(), R3, heis3_metric(3), Matrix::identity(3), {{m, Matrix(3, 3), Matrix(3, 3)}},
                   Representation::zero(3, 3)};
  auto r = check_compatibility(data);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.identity, 1);
  EXPECT_EQ(r.witness, (std::array<std::size_t, 3>{0, 0, 1}));
  EXPECT_EQ(validation_message([&] { bicross(data); }), "bicross compatibility identity 1 fails on basis triple (1, 1, 2)");
}

TEST(Compatibility, NonRepresentationIsRejected) {
  Matrix a(3, 3), b(3, 3);
  a(0, 1) = 1;
  b(1, 0) = 1;
  BicrossData data{R3, R3, heis3_metric(3), Matrix::identity(3), {{a, b, Matrix(3, 3)}}, Representation::zero(3, 3)};
  EXPECT_EQ(validation_message([&] { validate(data); }), "φ is not a representation on (e1, e2)");
}

TEST(Bicross, ZeroActionsGiveAbelianStandardStructure) {
  auto p = bicross(trivial(R3, R3, BilinearForm::symmetric(Matrix::identity(3))));
  EXPECT_TRUE(p.algebra.is_abelian());
  auto s = p.born();
  EXPECT_EQ(s.J, abelian_standard(3).J);
  EXPECT_TRUE(check_integrable(s).verdict);
}

TEST(Bicross, FamilyOriginIsH10) {
  auto p = bicross(family_r3_heis3(0, 0, 0, 0));
  EXPECT_EQ(fingerprint(p.algebra), catalog_fingerprint(entry("h10")));
  EXPECT_EQ(identify_born(p.algebra).describe(), "h10");
}

TEST(Bicross, FactorsEmbedAsSubalgebras) {
  Rng rng(602);
  for (int t = 0; t < 30; ++t) {
    auto d = bt::random_bicross(rng);
    if (!check_compatibility(d).holds) continue;
    auto p = bicross(d);
    EXPECT_TRUE(check_jacobi(p.algebra).holds);
    EXPECT_TRUE(is_subalgebra(p.algebra, p.hermitian.g_plus));
    EXPECT_TRUE(is_subalgebra(p.algebra, p.hermitian.g_minus));
    EXPECT_EQ(restrict_to(p.algebra, p.hermitian.g_minus), d.g_minus);
  }
}

TEST(Bicross, ComplexStructureBlocks) {
  Rng rng(603);
  Matrix q = bt::random_invertible(rng, 3);
  Matrix j = product_complex_structure(q);
  EXPECT_EQ(j.block(0, 3, 3, 3), -1 * inverse(q));
  EXPECT_EQ(j.block(3, 0, 3, 3), q);
  EXPECT_EQ(j * j, -1 * Matrix::identity(6));
}

TEST(IntegrabilityConditions, AbelianFactorsWithZeroActions) {
  Rng rng(604);
  auto c = check_integrability_conditions(trivial(R3, R3, bt::random_metric(rng, 3)));
  EXPECT_TRUE(c.c1 && c.c2 && c.c3 && c.c4 && c.verdict);
}

TEST(IntegrabilityConditions, FlatSeedSatisfiesAll) {
  EXPECT_TRUE(check_integrability_conditions(flat_seed_construction(heisenberg3(), heis3_metric(3), Matrix::identity(3))).verdict);
}

TEST(IntegrabilityConditions, FamilyAtSampledParameters) {
  for (auto [x, y, x0, y0] : std::vector<std::array<Rational, 4>>{
           {0, 0, 0, 0}, {1, 1, 0, 0}, {frac(-3, 2), 1, 2, -5}, {7, frac(1, 3), frac(2, 9), 4}}) {
    auto d = family_r3_heis3(x, y, x0, y0);
    EXPECT_TRUE(check_compatibility(d).holds);
    EXPECT_TRUE(check_integrability_conditions(d).verdict);
  }
}

TEST(Semidirect, FlatHeisenbergSeedGivesNilpotentBornAlgebra) {
  auto seed = flat_seed_construction(heisenberg3(), heis3_metric(3), Matrix::identity(3));
  auto r = semidirect_born(seed.g_plus, seed.g_minus, seed.h_minus, seed.Q, seed.phi);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(nil_step(r.product.algebra));
  EXPECT_TRUE(check_integrable(r.product.born()).verdict);
}

TEST(Semidirect, ZeroActionIsDirectSum) {
  auto r = semidirect_born(R3, heisenberg3(), heis3_metric(3), Matrix::identity(3), Representation::zero(3, 3));
  EXPECT_EQ(r.product.algebra, direct_sum(R3, heisenberg3()));
  // J carries ∇ on g− onto ∇ on the abelian g+, so ∇⁻ would have to vanish.
  EXPECT_FALSE(r.verdict);
  EXPECT_FALSE(check_integrable(r.product.born()).verdict);
  auto curved = semidirect_born(R3, heisenberg3(), heis3_metric(1), Matrix::identity(3), Representation::zero(3, 3));
  EXPECT_FALSE(curved.verdict);
  EXPECT_FALSE(check_integrable(curved.product.born()).verdict);
}

TEST(Semidirect, SecondAbelianInstanceIsH9) {
  auto second = family_r3_r3().second;
  auto r = semidirect_born(second.g_plus, second.g_minus, second.h_minus, second.Q, second.phi);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(identify_born(r.product.algebra).describe(), "h9");
}

TEST(Semidirect, NonDerivationIsRejected) {
  Matrix m(3, 3);
  m(0, 0) = 1;
  EXPECT_EQ(validation_message([&] {
              semidirect_born(heisenberg3(), R3, heis3_metric(3), Matrix::identity(3), {{m, Matrix(3, 3), Matrix(3, 3)}});
            }),
            "φ(e1) is not a derivation of g+");
}

TEST(FlatSeed, AbelianSeedHasZeroAction) {
  Rng rng(605);
  auto d = flat_seed_construction(R3, bt::random_metric(rng, 3), bt::random_invertible(rng, 3));
  EXPECT_TRUE(d.phi.is_zero());
  EXPECT_TRUE(bicross(d).algebra.is_abelian());
}

TEST(FlatSeed, HeisenbergSeed) {
  auto d = flat_seed_construction(heisenberg3(), heis3_metric(3), Matrix::identity(3));
  auto s = bicross(d).born();
  EXPECT_TRUE(is_flat(s.algebra, s.h));
  EXPECT_EQ(s.algebra.dim(), 6u);
}

TEST(FlatSeed, CurvedSeedIsRefused) {
  EXPECT_EQ(validation_message([] { flat_seed_construction(heisenberg3(), heis3_metric(1), Matrix::identity(3)); }),
            "flat seed required: h− is not flat");
}

TEST(Decompose, AbelianStandard) {
  auto dec = decompose_born(assemble_from_hermitian(abelian_standard(2)));
  EXPECT_TRUE(dec.data.phi.is_zero());
  EXPECT_TRUE(dec.data.rho.is_zero());
  EXPECT_EQ(dec.data.Q, Matrix::identity(2));
}

TEST(Decompose, ProductOfAbelianPlanes) {
  auto s = assemble_from_hermitian(*entry("rh3").structure);
  auto dec = decompose_born(s);
  EXPECT_TRUE(dec.data.g_plus.is_abelian());
  EXPECT_TRUE(dec.data.g_minus.is_abelian());
  EXPECT_FALSE(dec.data.phi.is_zero() && dec.data.rho.is_zero());
  EXPECT_TRUE(round_trip(s));
}

TEST(Decompose, EverySixDimensionalStructureRoundTrips) {
  for (const auto& e : catalog())
    if (e.structure && e.algebra.dim() == 6) EXPECT_TRUE(round_trip(assemble_from_hermitian(*e.structure))) << e.name;
}

TEST(Decompose, NonIntegrableIsRefused) {
  auto d = abelian_standard(2);
  d.algebra = entry("rh3").algebra;
  EXPECT_EQ(validation_message([&] { decompose_born(assemble_from_hermitian(d)); }),
            "decompose_born: eigenspaces of A are not subalgebras");
}

TEST(Hyperkahler, FromEuclideanPlane) {
  Matrix i{{0, -1}, {1, 0}};
  auto r = hyperkahler_from_flat(LieAlgebra(2), BilinearForm::symmetric(Matrix::identity(2)), i, Matrix::identity(2));
  EXPECT_EQ(r.J * r.second, -1 * (r.second * r.J));
  EXPECT_EQ(r.second * r.second, -1 * Matrix::identity(4));
}

TEST(Hyperkahler, FromFlatKahlerFourManifold) {
  // rh3 carries a flat pseudo-Kähler structure; the product is 8-dimensional.
  const auto& d = *entry("rh3").structure;
  Rng rng(606);
  Matrix q = bt::random_invertible(rng, 4);
  auto r = hyperkahler_from_flat(d.algebra, d.h, d.J, q);
  const auto& h = r.product.hermitian.h;
  const auto& l = r.product.algebra;
  EXPECT_EQ(r.J * r.second, -1 * (r.second * r.J));
  EXPECT_EQ(h.pullback(r.second), h);
  EXPECT_EQ(h.pullback(r.J), h);
  Connection c = levi_civita(l, h);
  EXPECT_TRUE(nabla_parallel(c, r.J));
  EXPECT_TRUE(nabla_parallel(c, r.second));
  // I₊ commutes with every φ(X−).
  Matrix i_plus = r.second.block(0, 0, 4, 4);
  auto seed = flat_seed_construction(d.algebra, d.h, q);
  for (const auto& m : seed.phi.images) EXPECT_EQ(i_plus * m, m * i_plus);
}

TEST(Hyperkahler, PreconditionsAreNamed) {
  auto h = BilinearForm::symmetric(Matrix::identity(2));
  EXPECT_EQ(validation_message([&] { hyperkahler_from_flat(LieAlgebra(2), h, Matrix::identity(2), Matrix::identity(2)); }),
            "I−² ≠ −Id");
  Matrix i{{0, -2}, {frac(1, 2), 0}};
  EXPECT_EQ(validation_message([&] { hyperkahler_from_flat(LieAlgebra(2), h, i, Matrix::identity(2)); }),
            "I− is not an isometry of h−");
}

TEST(Hypersymplectic, FromNullPlane) {
  auto h = BilinearForm::symmetric(sym_pair(2, 0, 1));
  Matrix e = Matrix::diagonal({1, -1});
  auto r = hypersymplectic_from_flat(LieAlgebra(2), h, e, Matrix::identity(2));
  const auto& ph = r.product.hermitian.h;
  EXPECT_EQ(r.J * r.second, -1 * (r.second * r.J));
  EXPECT_EQ(r.second * r.second, Matrix::identity(4));
  EXPECT_EQ(ph.pullback(r.second).gram(), -1 * ph.gram());
  // h anti-invariance makes both eigenspaces of E null for h.
  for (int sign : {1, -1}) {
    Matrix v = kernel_matrix(r.second - sign * Matrix::identity(4));
    EXPECT_EQ(v.cols(), 2u);
    EXPECT_TRUE((v.transpose() * ph.gram() * v).is_zero());
  }
  EXPECT_EQ(validation_message([&] { hypersymplectic_from_flat(LieAlgebra(2), h, Matrix::identity(2), Matrix::identity(2)); }),
            "E− does not reverse h−");
}

TEST(Families, HeisenbergFamilyCases) {
  EXPECT_EQ(identify_product(family_r3_heis3(-1, 0, 0, 0)), "h4");
  EXPECT_EQ(identify_product(family_r3_heis3(1, 0, 0, 0)), "h7");
  EXPECT_EQ(identify_product(family_r3_heis3(2, 1, 0, 0)), "h13");
}

TEST(Families, AbelianInstances) {
  auto [first, second] = family_r3_r3();
  EXPECT_EQ(identify_product(first), "h8");
  EXPECT_EQ(identify_product(second), "h9");
  for (const auto& d : {first, second}) {
    EXPECT_TRUE(check_compatibility(d).holds);
    EXPECT_TRUE(check_integrability_conditions(d).verdict);
    EXPECT_TRUE(check_jacobi(bicross(d).algebra).holds);
  }
}

TEST(Blocks, ZeroActionsGiveBlockDiagonalConnection) {
  BicrossData d = trivial(heisenberg3(), heisenberg3(), heis3_metric(1));
  Connection c = levi_civita_blocks(d);
  Connection plus = levi_civita(d.g_plus, d.h_plus()), minus = levi_civita(d.g_minus, d.h_minus);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(c.gamma[i], block_diagonal(plus.gamma[i], Matrix(3, 3)));
    EXPECT_EQ(c.gamma[3 + i], block_diagonal(Matrix(3, 3), minus.gamma[i]));
  }
}

TEST(Blocks, FamilyOriginMatchesKoszul) {
  auto d = family_r3_heis3(0, 0, 0, 0);
  auto s = bicross(d).born();
  EXPECT_EQ(levi_civita_blocks(d), levi_civita(s.algebra, s.h));
  EXPECT_EQ(levi_civita_blocks(d), bt::oracle_levi_civita(s.algebra, s.h));
}

TEST(Blocks, MixedDerivativeFormula) {
  // ∇_{X+} Y− = −φ(Y−)ˢ X+ + ρ(X+)ᵃ Y−, entry by entry.
  Rng rng(607);
  int checked = 0;
  while (checked < 40) {
    auto d = bt::random_bicross(rng);
    if (!check_compatibility(d).holds) continue;
    const std::size_t n = d.n();
    auto s = bicross(d).born();
    Connection c = levi_civita(s.algebra, s.h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        Matrix got = c.gamma[i].col(n + a);
        Matrix plus = -1 * sym_part(d.phi[a], d.h_plus()) * Matrix::unit(n, i);
        Matrix minus = antisym_part(d.rho[i], d.h_minus) * Matrix::unit(n, a);
        EXPECT_EQ(got.block(0, 0, n, 1), plus);
        EXPECT_EQ(got.block(n, 0, n, 1), minus);
      }
    ++checked;
  }
}

TEST(Groebner, UnitIdealDetection) {
  auto x = var(2, 0), y = var(2, 1);
  EXPECT_TRUE(is_unit_ideal(groebner_basis({x, x - cst(2, 1)})));
  EXPECT_TRUE(is_unit_ideal(groebner_basis({x * y - cst(2, 1), y})));
  EXPECT_FALSE(is_unit_ideal(groebner_basis({x * x - y, y})));
  auto g = groebner_basis({x * x - y, x * y - cst(2, 1)});
  EXPECT_FALSE(is_unit_ideal(g));
  // y³ = 1 and x = y² lie in the ideal: both reduce to zero.
  EXPECT_TRUE(reduce(y * y * y - cst(2, 1), g).is_zero());
  EXPECT_TRUE(reduce(x - y * y, g).is_zero());
}

TEST(Groebner, CurvedHeisenbergMetricsAdmitNoConformingRepresentation) {
  for (int k : {1, 2}) {
    auto r = representation_obstruction(heisenberg3(), heis3_metric(k), Matrix::identity(3));
    EXPECT_TRUE(r.shape_exists);
    EXPECT_EQ(r.parameters, 10u);
    EXPECT_EQ(r.equations, 27u);
    EXPECT_TRUE(r.no_representation) << "h" << k;
  }
  auto flat = representation_obstruction(heisenberg3(), heis3_metric(3), Matrix::identity(3));
  EXPECT_TRUE(flat.shape_exists);
  EXPECT_FALSE(flat.no_representation);
}

TEST(Audit, CenterAndHeisenbergChecks) {
  EXPECT_TRUE(heis3_audit().all_pass());
  EXPECT_TRUE(center_audit().all_pass());
}

// Properties

TEST(ProductsProperty, ConditionsMatchProductIntegrability) {
  Rng rng(608);
  int compatible = 0, integrable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto d = bt::random_bicross(rng);
    if (!check_compatibility(d).holds) continue;
    ++compatible;
    auto c = check_integrability_conditions(d);
    auto s = bicross(d).born();
    EXPECT_EQ(c.verdict, check_integrable(s).verdict) << "trial " << trial;
    integrable += c.verdict;
  }
  EXPECT_GE(compatible, 250);
  EXPECT_GT(integrable, 50);
  EXPECT_LT(integrable, compatible);
}

TEST(ProductsProperty, BlockConnectionEqualsKoszul) {
  Rng rng(609);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto d = bt::random_bicross(rng);
    if (!check_compatibility(d).holds) continue;
    auto s = bicross(d).born();
    EXPECT_EQ(levi_civita_blocks(d), levi_civita(s.algebra, s.h)) << "trial " << trial;
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(ProductsProperty, FlatSeedProductsAreFlat) {
  Rng rng(610);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix q = bt::random_invertible(rng, 3);
    auto d = trial % 2 ? flat_seed_construction(heisenberg3(), heis3_metric(3), q)
                       : flat_seed_construction(R3, bt::random_metric(rng, 3), q);
    auto s = bicross(d).born();
    EXPECT_TRUE(is_flat(s.algebra, s.h));
    EXPECT_TRUE(check_integrability_conditions(d).verdict);
  }
}

TEST(ProductsProperty, DecomposeThenRebuildIsEquivalent) {
  Rng rng(611);
  auto structured = bt::structured_entries();
  for (int trial = 0; trial < 200; ++trial) {
    BornStructure s;
    if (trial % 2) {
      const auto* e = structured[trial % structured.size()];
      s = assemble_from_hermitian(*e->structure);
    } else {
      s = bicross(family_r3_heis3(bt::random_rational(rng), bt::random_rational(rng), bt::random_rational(rng),
                                  bt::random_rational(rng)))
              .born();
    }
    s = bt::conjugate(s, bt::random_invertible(rng, s.dim()));
    EXPECT_TRUE(round_trip(s)) << "trial " << trial;
  }
}

TEST(ProductsProperty, FamilyFingerprintIgnoresShiftParameters) {
  Rng rng(612);
  for (int trial = 0; trial < 50; ++trial) {
    Rational x = bt::random_rational(rng), y = trial % 3 ? Rational(0) : bt::random_rational(rng);
    auto base = fingerprint(bicross(family_r3_heis3(x, y, 0, 0)).algebra);
    auto shifted = fingerprint(bicross(family_r3_heis3(x, y, bt::random_rational(rng), bt::random_rational(rng))).algebra);
    EXPECT_EQ(base, shifted) << "x=" << x << " y=" << y;
  }
}
