#include <gtest/gtest.h>

#include <cmath>

#include "nctorus/pr_lab.hpp"

using namespace nct;

namespace {

const double kTheta = std::sqrt(2.0) - 1.0;
constexpr int kGrid = 1 << 14;

}  // namespace

TEST(SmoothStep, Shape) {
  EXPECT_EQ(smooth_step(-0.5), 0.0);
  EXPECT_EQ(smooth_step(0.0), 0.0);
  EXPECT_EQ(smooth_step(1.0), 1.0);
  EXPECT_NEAR(smooth_step(0.5), 0.5, 1e-15);
  for (double u = 0.05; u < 1.0; u += 0.05) EXPECT_NEAR(smooth_step(u) + smooth_step(1 - u), 1.0, 1e-14);
  EXPECT_NEAR(wrap_circle(0.75), -0.25, 1e-15);
  EXPECT_NEAR(wrap_circle(-0.5), -0.5, 1e-15);
}

TEST(PRProjection, TraceAndResiduals) {
  const auto e = build_pr_projection(kTheta, kTheta, kGrid);
  EXPECT_EQ(e.shift_power, 1);
  const auto res = check_projection_identities(e);
  EXPECT_LT(res.max(), 1e-12);
  EXPECT_EQ(res.flip_symmetry, 0.0);
  const auto ch = pr_character(e);
  EXPECT_NEAR(ch.tau, kTheta, 1e-8);
  for (double v : ch.phi) EXPECT_NEAR(v, 0.5, 1e-6);
}

TEST(PRProjection, DegenerateProjections) {
  auto zero = [](double) { return std::complex<double>(0.0); };
  auto one = [](double) { return std::complex<double>(1.0); };
  const auto z = PRProjection::from_functions(kTheta, 0.0, 4096, 1, zero, zero, zero);
  EXPECT_EQ(check_projection_identities(z).max(), 0.0);
  const auto u = PRProjection::from_functions(kTheta, 1.0, 4096, 1, zero, one, zero);
  EXPECT_EQ(check_projection_identities(u).max(), 0.0);
  const auto ch = pr_character(u);
  EXPECT_NEAR(ch.tau, 1.0, 1e-14);
  EXPECT_NEAR(ch.phi[0], 1.0, 1e-14);
  EXPECT_NEAR(ch.phi[1], 0.0, 1e-14);
  EXPECT_NEAR(ch.phi[2], 0.0, 1e-14);
  EXPECT_NEAR(ch.phi[3], 0.0, 1e-14);
}

TEST(PRProjection, BrokenProjectionIsCaught) {
  auto half = [](double) { return std::complex<double>(0.5); };
  auto zero = [](double) { return std::complex<double>(0.0); };
  const auto bad = PRProjection::from_functions(kTheta, 0.5, 4096, 1, zero, half, zero);
  EXPECT_GT(check_projection_identities(bad).max(), 0.1);
  EXPECT_THROW(pr_character(bad), std::runtime_error);
}

TEST(PRProjection, ClosedFormCharacterAgrees) {
  const auto e = build_pr_projection(kTheta, kTheta, kGrid);
  const auto fft = pr_character(e);
  const auto direct = pr_character_closed_form(e.as_element(), kTheta, kGrid);
  EXPECT_NEAR(fft.tau, direct.tau, 1e-10);
  for (std::size_t b = 0; b < 4; ++b) EXPECT_NEAR(fft.phi[b], direct.phi[b], 1e-8);
}

TEST(PRProjection, HigherShiftPower) {
  // frac(2 theta) = 2 sqrt2 - 2 ~ 0.828 is out of range, frac(-2 theta) ~ 0.172 is reachable with n = -2
  const double target = 1.0 - (2 * kTheta - std::floor(2 * kTheta));
  const auto e = build_pr_projection(kTheta, target, kGrid);
  EXPECT_EQ(std::abs(e.shift_power), 2);
  EXPECT_LT(check_projection_identities(e).max(), 1e-12);
  EXPECT_NEAR(pr_character(e).tau, target, 1e-8);
}

TEST(PRProjection, AuxiliaryTarget) {
  EXPECT_NEAR(auxiliary_trace_target(kTheta), 2 * (3 * kTheta - 1), 1e-15);
  EXPECT_THROW(auxiliary_trace_target(0.3), std::invalid_argument);
  const double aux = auxiliary_trace_target(kTheta);
  EXPECT_EQ(find_shift_power(kTheta, aux), 6);
  const auto e = build_pr_projection(kTheta, aux, kGrid);
  EXPECT_LT(check_projection_identities(e).max(), 1e-12);
  EXPECT_NEAR(pr_character(e).tau, aux, 1e-8);
}

TEST(PRProjection, RejectsInfeasibleInput) {
  EXPECT_THROW(build_pr_projection(kTheta, 0.3, kGrid), InfeasibleGeometry);
  EXPECT_THROW(build_pr_projection(kTheta, 0.7, kGrid), InfeasibleGeometry);
  EXPECT_THROW(build_pr_projection(kTheta, kTheta, 1000), std::invalid_argument);
  EXPECT_THROW(build_pr_projection(kTheta, kTheta, 1024), std::invalid_argument);
  EXPECT_THROW(build_pr_projection(1.5, 0.4, kGrid), std::invalid_argument);
}

TEST(Toral, SignPattern) {
  const auto e = build_pr_projection(kTheta, kTheta, kGrid);
  const auto base = pr_character(e);
  const auto g1 = pr_character(apply_toral(e, Toral::Gamma1));
  const auto g2 = pr_character(apply_toral(e, Toral::Gamma2));
  const auto g3 = pr_character(apply_toral(e, Toral::Gamma3));
  const std::array<double, 4> s1{1, 1, -1, -1}, s2{1, -1, 1, -1}, s3{1, -1, -1, 1};
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_NEAR(g1.phi[b], s1[b] * base.phi[b], 1e-8);
    EXPECT_NEAR(g2.phi[b], s2[b] * base.phi[b], 1e-8);
    EXPECT_NEAR(g3.phi[b], s3[b] * base.phi[b], 1e-8);
  }
  EXPECT_NEAR(g1.tau, base.tau, 1e-12);
}

TEST(Toral, GammaThreeIsComposite) {
  const auto e = build_pr_projection(kTheta, kTheta, 4096);
  const auto g3 = apply_toral(e, Toral::Gamma3);
  const auto g12 = apply_toral(apply_toral(e, Toral::Gamma2), Toral::Gamma1);
  for (std::size_t k = 0; k < g3.samples_zero.size(); ++k) {
    ASSERT_NEAR(std::abs(g3.samples_zero[k] - g12.samples_zero[k]), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(g3.samples_plus[k] - g12.samples_plus[k]), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(g3.samples_minus[k] - g12.samples_minus[k]), 0.0, 1e-15);
  }
}

TEST(OrthogonalSymmetrization, VanishingPhiTraces) {
  const auto sym = build_orthogonal_symmetrization(kTheta, kGrid);
  EXPECT_LT(sym.orthogonality_residual, 1e-12);
  EXPECT_LT(check_projection_identities(sym.e).max(), 1e-12);
  const auto ch = pr_character(sym.e);
  for (double v : ch.phi) EXPECT_NEAR(v, 0.0, 1e-6);
  // g alone is not flip-invariant, so its trace is read off the samples directly
  std::complex<double> g_tau = 0.0;
  for (const auto& v : sym.g.samples_zero) g_tau += v;
  g_tau /= static_cast<double>(sym.g.samples_zero.size());
  EXPECT_NEAR(ch.tau, 2 * g_tau.real(), 1e-10);
  EXPECT_THROW(pr_character(sym.g), std::runtime_error);
}

TEST(CircleElement, MultiplyShiftsArguments) {
  // (f V)(g V^-1) = f(x) g(x + theta)
  CircleElement x, y;
  x.coeffs[1] = [](double s) { return std::complex<double>(std::cos(2 * M_PI * s)); };
  y.coeffs[-1] = [](double s) { return std::complex<double>(s); };
  const double theta = 0.3;
  const auto p = multiply(x, y, theta);
  ASSERT_EQ(p.coeffs.size(), 1u);
  EXPECT_NEAR(std::abs(p.coeffs.at(0)(0.1) - std::cos(2 * M_PI * 0.1) * 0.4), 0.0, 1e-14);
}
