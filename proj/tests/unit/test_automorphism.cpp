#include <gtest/gtest.h>

#include "nctorus/automorphism.hpp"
#include "nctorus/random_elements.hpp"

using namespace nct;

namespace {

PhaseScalar t(std::int64_t k) { return PhaseScalar::t_power(k); }
NcElement mono(std::int64_t m, std::int64_t n, const PhaseScalar& c = 1) { return NcElement::monomial(m, n, c); }

AutomorphismSpec named(NamedMap m) { return AutomorphismSpec::named(m); }

void expect_agree(const AutomorphismSpec& x, const AutomorphismSpec& y, int radius) {
  for (std::int64_t m = -radius; m <= radius; ++m)
    for (std::int64_t n = -radius; n <= radius; ++n)
      ASSERT_EQ(apply(x, mono(m, n)), apply(y, mono(m, n))) << x.to_string() << " vs " << y.to_string() << " at " << m
                                                             << "," << n;
}

}  // namespace

TEST(ModularMatrix, RejectsDeterminant) {
  EXPECT_THROW(ModularMatrix::make(1, 1, 1, 1), DeterminantError);
  EXPECT_THROW(AutomorphismSpec::modular(ModularMatrix{2, 0, 0, 2}), DeterminantError);
  try {
    ModularMatrix::make(1, 1, 1, 1);
  } catch (const DeterminantError& e) {
    EXPECT_NE(std::string(e.what()).find("determinant must be 1"), std::string::npos);
  }
}

TEST(ModularMatrix, BoxSizes) {
  EXPECT_EQ(sl2z_box(2).size(), 52u);
  EXPECT_EQ(sl2z_box(3).size(), 116u);
  EXPECT_EQ(sl2z_box(5).size(), 308u);
}

TEST(ModularMatrix, ProductLayout) {
  // [a c; b d] with the first column giving the image of U.
  const auto s = ModularMatrix::make(0, -1, 1, 0);
  const auto k = ModularMatrix::make(-1, 1, -1, 0);
  EXPECT_EQ(s * s, ModularMatrix::make(-1, 0, 0, -1));
  EXPECT_EQ(k * k * k, ModularMatrix::identity());
  EXPECT_EQ(k * s, ModularMatrix::make(1, 0, -1, 1));
  EXPECT_EQ(s.act({1, 0}), (Monomial{0, -1}));
}

TEST(Automorphism, GeneratorImages) {
  const auto fourier = image_generators(AutomorphismSpec::modular(0, -1, 1, 0));
  EXPECT_EQ(fourier.first, NcElement::V(-1));
  EXPECT_EQ(fourier.second, NcElement::U());
  const auto cubic = image_generators(named(NamedMap::Kappa));
  EXPECT_EQ(cubic.first, mono(-1, 1, t(-1)));
  EXPECT_EQ(cubic.second, NcElement::U(-1));
  const auto id = image_generators(AutomorphismSpec::modular(ModularMatrix::identity()));
  EXPECT_EQ(id.first, NcElement::U());
  EXPECT_EQ(id.second, NcElement::V());
}

TEST(Automorphism, ShearOnU) { EXPECT_EQ(apply(AutomorphismSpec::modular(1, 1, 0, 1), NcElement::U()), mono(1, 1, t(1))); }

TEST(Automorphism, ToralSigns) {
  EXPECT_EQ(apply(named(NamedMap::Gamma1), mono(3, 2)), -mono(3, 2));
  EXPECT_EQ(apply(named(NamedMap::Gamma2), mono(3, 2)), mono(3, 2));
  EXPECT_EQ(apply(named(NamedMap::Gamma3), mono(1, 1)), mono(1, 1));
  EXPECT_EQ(apply(named(NamedMap::Gamma3), mono(0, 1)), -mono(0, 1));
}

TEST(Automorphism, Validation) {
  EXPECT_TRUE(validate_automorphism(NcElement::V(-1), NcElement::U()).ok);
  const auto bad = validate_automorphism(NcElement::U(), NcElement::U());
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.failed_identity.empty());
  EXPECT_FALSE(validate_automorphism(NcElement::U() + NcElement::V(), NcElement::V()).ok);
  EXPECT_THROW(AutomorphismSpec::custom(NcElement::U(), NcElement::U()), InvalidAutomorphism);
  for (const auto& m : sl2z_box(3)) {
    const auto [u, v] = image_generators(AutomorphismSpec::modular(m));
    ASSERT_TRUE(validate_automorphism(u, v).ok) << m.to_string();
  }
}

TEST(Automorphism, CustomMatchesModular) {
  const auto custom = AutomorphismSpec::custom(NcElement::V(-1), NcElement::U());
  expect_agree(custom, named(NamedMap::Sigma), 4);
  EXPECT_FALSE(custom.as_modular().has_value());
}

TEST(Automorphism, FourierSquaredIsFlip) {
  expect_agree(compose(named(NamedMap::Sigma), named(NamedMap::Sigma)), named(NamedMap::Flip), 4);
  expect_agree(named(NamedMap::Flip), AutomorphismSpec::modular(-1, 0, 0, -1), 4);
}

TEST(Automorphism, CubicCubedIsIdentity) {
  const auto k3 = AutomorphismSpec::composite({named(NamedMap::Kappa), named(NamedMap::Kappa), named(NamedMap::Kappa)});
  EXPECT_EQ(apply(k3, NcElement::U()), NcElement::U());
  EXPECT_EQ(apply(k3, NcElement::V()), NcElement::V());
}

TEST(Automorphism, CompositionOrder) {
  // inner first: the composite's action equals the modular map of the product
  const auto shear = AutomorphismSpec::modular(1, 1, 0, 1);
  const auto fourier = AutomorphismSpec::modular(0, -1, 1, 0);
  expect_agree(compose(shear, fourier), AutomorphismSpec::modular(ModularMatrix::make(1, 1, 0, 1) * ModularMatrix::make(0, -1, 1, 0)), 4);
  EXPECT_EQ(apply(compose(shear, fourier), NcElement::V()), apply(shear, apply(fourier, NcElement::V())));
  EXPECT_EQ(compose(shear, fourier).to_string(), "mod(1,1,0,1).mod(0,-1,1,0)");
}

TEST(Automorphism, CubicFourierRelationHoldsOnlyModTwo) {
  // KS and SK^2 are distinct in PSL(2,Z); as algebra maps the two sides differ
  // even on flip-invariant elements.
  const auto lhs = compose(named(NamedMap::Kappa), named(NamedMap::Sigma));
  const auto rhs = AutomorphismSpec::composite({named(NamedMap::Sigma), named(NamedMap::Kappa), named(NamedMap::Kappa)});
  EXPECT_EQ(*lhs.as_modular(), ModularMatrix::make(1, 0, -1, 1));
  EXPECT_EQ(*rhs.as_modular(), ModularMatrix::make(-1, 0, -1, -1));
  const auto x = NcElement::V() + NcElement::V(-1);
  EXPECT_EQ(apply(lhs, x), mono(-1, 1, t(-1)) + mono(1, -1, t(-1)));
  EXPECT_EQ(apply(rhs, x), mono(-1, -1, t(1)) + mono(1, 1, t(1)));
}

TEST(AutomorphismProperty, ActionLaw) {
  const auto box = sl2z_box(2);
  for (const auto& a : box)
    for (const auto& b : box)
      for (std::int64_t m = -4; m <= 4; ++m)
        for (std::int64_t n = -4; n <= 4; ++n)
          ASSERT_EQ(apply(compose(AutomorphismSpec::modular(a), AutomorphismSpec::modular(b)), mono(m, n)),
                    apply_modular_monomial(a * b, {m, n}))
              << a.to_string() << " " << b.to_string();
}

TEST(AutomorphismProperty, ClosedFormMatchesGeneratorExpansion) {
  for (const auto& mat : sl2z_box(3)) {
    const auto [u, v] = image_generators(AutomorphismSpec::modular(mat));
    for (std::int64_t m = -4; m <= 4; ++m)
      for (std::int64_t n = -4; n <= 4; ++n)
        ASSERT_EQ(apply_modular_monomial(mat, {m, n}), apply_by_generators(u, v, mono(m, n))) << mat.to_string();
  }
}

TEST(AutomorphismProperty, StarHomomorphismCommutingWithFlip) {
  Rng rng(17);
  std::vector<AutomorphismSpec> specs;
  for (auto m : {NamedMap::Identity, NamedMap::Sigma, NamedMap::Kappa, NamedMap::Flip, NamedMap::Gamma1,
                 NamedMap::Gamma2, NamedMap::Gamma3})
    specs.push_back(named(m));
  for (int i = 0; i < 20; ++i) specs.push_back(AutomorphismSpec::modular(random_modular(rng, 4)));
  for (const auto& spec : specs) {
    EXPECT_TRUE(commutes_with_flip(spec));
    for (int i = 0; i < 30; ++i) {
      const auto x = random_element(rng, 2, 3), y = random_element(rng, 2, 3);
      ASSERT_EQ(apply(spec, x * y), apply(spec, x) * apply(spec, y)) << spec.to_string();
      ASSERT_EQ(apply(spec, x.adjoint()), apply(spec, x).adjoint()) << spec.to_string();
      ASSERT_EQ(apply(spec, x.flip()), apply(spec, x).flip()) << spec.to_string();
    }
  }
}

TEST(Automorphism, NonFlipCommutingCustom) {
  // U -> U V^0 style maps always commute; a phase twist U -> i U does not.
  const auto twist = AutomorphismSpec::custom(NcElement(PhaseScalar(GaussianRational::imaginary_unit())) * NcElement::U(),
                                              NcElement::V());
  EXPECT_FALSE(commutes_with_flip(twist));
}
