#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <scaleqm/grid.hpp>
#include <scaleqm/scaling_field.hpp>

using namespace scaleqm;

namespace {

FieldSpec smooth_field() {
  return FieldSpec::closed_form({ProfileKind::gaussian, 0.3, 0.5, 2.0, 1.0}, {ProfileKind::sine, 0.2, 0.0, 1.0, 0.7});
}

}  // namespace

TEST(Grid, ConstructionRules) {
  EXPECT_THROW(Grid1D(4, 0.1), std::invalid_argument);
  EXPECT_THROW(Grid1D(12, 0.1), std::invalid_argument);
  EXPECT_THROW(Grid1D(16, 0.0), std::invalid_argument);
  EXPECT_THROW(Grid1D(16, -1.0), std::invalid_argument);
  EXPECT_NO_THROW(Grid1D(8, 0.5));

  const Grid1D g = Grid1D::centered(16, 8.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
  EXPECT_DOUBLE_EQ(g.origin(), -4.0);
  EXPECT_DOUBLE_EQ(g.length(), 8.0);
  EXPECT_DOUBLE_EQ(g.coordinate(3), -2.5);
}

TEST(Grid, MomentumLatticeInSlotOrder) {
  const Grid1D g(8, 0.25);
  const long expected[8] = {0, 1, 2, 3, -4, -3, -2, -1};
  for (std::size_t m = 0; m < 8; ++m) EXPECT_EQ(g.mode(m), expected[m]);
  EXPECT_DOUBLE_EQ(g.momentum(1, 2.0), 2.0 * M_PI * 2.0 / 2.0);
}

TEST(Grid, IndexOfAcceptsOnlyNodes) {
  const Grid1D g = Grid1D::centered(32, 8.0);
  EXPECT_EQ(g.index_of(0.0), 16u);
  EXPECT_EQ(g.index_of(-4.0), 0u);
  EXPECT_THROW(g.index_of(0.1), OffGridError);
  EXPECT_THROW(g.index_of(8.0), OffGridError);
  EXPECT_TRUE(g.contains(3.75));
  EXPECT_FALSE(g.contains(3.7));
}

TEST(PhysicalConstants, Validation) {
  EXPECT_NO_THROW(PhysicalConstants{}.validate());
  EXPECT_THROW((PhysicalConstants{0.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((PhysicalConstants{1.0, -2.0}.validate()), std::invalid_argument);
}

TEST(Reductions, PairwiseSumIsOrderFixed) {
  std::vector<double> v(1000);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& x : v) x = u(rng);
  const double a = pairwise_sum(v);
  EXPECT_EQ(a, pairwise_sum(v));
  double naive = 0.0;
  for (double x : v) naive += x;
  EXPECT_NEAR(a, naive, 1e-12);

  const Amplitudes c{{3.0, 4.0}, {0.0, 0.0}};
  EXPECT_DOUBLE_EQ(l2_norm(c, 4.0), 10.0);
  EXPECT_DOUBLE_EQ(max_abs(c), 5.0);
}

TEST(Profile, DerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (ProfileKind kind : {ProfileKind::constant, ProfileKind::linear, ProfileKind::gaussian, ProfileKind::sine}) {
    const Profile p{kind, 0.7, 0.3, 1.3, 2.1};
    for (double z : {-1.0, 0.2, 1.7}) {
      const double d1 = (p.value(z + h) - p.value(z - h)) / (2 * h);
      const double d2 = (p.derivative(z + h) - p.derivative(z - h)) / (2 * h);
      EXPECT_NEAR(p.derivative(z), d1, 1e-8);
      EXPECT_NEAR(p.second_derivative(z), d2, 1e-8);
    }
  }
}

TEST(FieldSpec, UnscaledIsOneEverywhere) {
  const FieldSpec f = FieldSpec::unscaled();
  const Grid1D g = Grid1D::centered(16, 4.0);
  for (const auto& gamma : f.gamma_on(g)) EXPECT_EQ(gamma, Complex(0.0, 0.0));
  EXPECT_EQ(f.g_at(1.3), Complex(1.0, 0.0));
  const auto G = f.gradient(g);
  EXPECT_TRUE(std::all_of(G.A.begin(), G.A.end(), [](double x) { return x == 0.0; }));
}

TEST(FieldSpec, ClosedFormValidation) {
  EXPECT_THROW(FieldSpec::closed_form({ProfileKind::gaussian, 1.0, 0.0, 0.0}, {}), std::invalid_argument);
  EXPECT_THROW(FieldSpec::closed_form({ProfileKind::linear, NAN}, {}), std::invalid_argument);
}

TEST(FieldSpec, SampledFieldStaysOnItsGrid) {
  const Grid1D g = Grid1D::centered(16, 4.0);
  std::vector<double> alpha(16), beta(16);
  for (std::size_t j = 0; j < 16; ++j) {
    alpha[j] = 0.1 * static_cast<double>(j);
    beta[j] = -0.05 * static_cast<double>(j);
  }
  const FieldSpec f = FieldSpec::sampled(g, alpha, beta);
  EXPECT_TRUE(f.is_sampled());
  EXPECT_EQ(f.gamma_at(g.coordinate(3)), Complex(alpha[3], beta[3]));
  EXPECT_THROW(f.gamma_at(0.1), OffGridError);
  EXPECT_THROW(f.gamma_on(Grid1D::centered(32, 4.0)), std::invalid_argument);
  EXPECT_THROW(FieldSpec::sampled(g, std::vector<double>(3), beta), std::invalid_argument);

  // interior central difference of a linear ramp is exact
  const auto G = f.gradient(g);
  EXPECT_NEAR(G.A[5], 0.1 / g.spacing(), 1e-12);
  EXPECT_NEAR(G.B[5], -0.05 / g.spacing(), 1e-12);
}

TEST(FieldSpec, AnalyticGradientOfClosedForm) {
  const FieldSpec f = smooth_field();
  const Grid1D g = Grid1D::centered(64, 10.0);
  const auto G = f.gradient(g);
  const auto dG = f.gradient_derivative(g);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double z = g.coordinate(j);
    EXPECT_EQ(G.A[j], f.alpha_profile().derivative(z));
    EXPECT_EQ(G.B[j], f.beta_profile().derivative(z));
    EXPECT_EQ(dG.A[j], f.alpha_profile().second_derivative(z));
  }
}

TEST(FieldSpec, ScaledAndLifted) {
  const FieldSpec f = smooth_field();
  const FieldSpec half = f.scaled(0.5);
  EXPECT_NEAR(std::abs(half.gamma_at(0.9) - 0.5 * f.gamma_at(0.9)), 0.0, 1e-16);
  const FieldSpec lifted = f.lift_to_chart(2.0);
  EXPECT_EQ(lifted.chart_reference(), 2.0);
  EXPECT_EQ(lifted.gamma_at(0.4), f.gamma_at(0.4));
  EXPECT_FALSE(f.chart_reference().has_value());
}

TEST(ScalingField, ConnectionRatioAndPairGamma) {
  const FieldSpec f = smooth_field();
  const double x = -0.75, y = 1.25;
  const Complex ratio = connection_ratio(f, x, y);
  EXPECT_NEAR(std::abs(ratio - f.g_at(y) / f.g_at(x)), 0.0, 1e-15);

  // geometric mean without branch-cut trouble: exp(pair_gamma)^2 = g(x) g(y)
  const Complex g2 = std::exp(pair_gamma(f, x, y));
  EXPECT_NEAR(std::abs(g2 * g2 - f.g_at(x) * f.g_at(y)), 0.0, 1e-14);
  EXPECT_EQ(pair_gamma(f, x, y), pair_gamma(f, y, x));
  EXPECT_EQ(pair_gamma(f, x, x), f.gamma_at(x));
}

TEST(ScalingField, NPointGammaReducesAndIsPermutationInvariant) {
  const FieldSpec f = smooth_field();
  const double one[1] = {0.4};
  EXPECT_EQ(n_point_gamma(f, one), f.gamma_at(0.4));
  const double two[2] = {0.4, -1.1};
  EXPECT_EQ(n_point_gamma(f, two), pair_gamma(f, 0.4, -1.1));
  EXPECT_THROW(n_point_gamma(f, std::span<const double>{}), std::invalid_argument);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> pts(5);
    for (auto& p : pts) p = u(rng);
    std::sort(pts.begin(), pts.end());
    const Complex base = n_point_gamma(f, pts);
    do {
      ASSERT_EQ(n_point_gamma(f, pts), base);
    } while (std::next_permutation(pts.begin(), pts.end()));
  }
}
