#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <scaleqm/evolution.hpp>
#include <scaleqm/momentum.hpp>
#include <scaleqm/operators.hpp>
#include <scaleqm/wave_packet.hpp>

using namespace scaleqm;

namespace {

constexpr double kPi = std::numbers::pi;

FieldSpec smooth_field(double length = 30.0) {
  return FieldSpec::closed_form({ProfileKind::gaussian, 0.3, 0.0, 2.0, 1.0},
                                {ProfileKind::sine, 0.2, 0.0, 1.0, 2.0 * kPi / length});
}

Amplitudes minus(const Amplitudes& a, const Amplitudes& b) {
  Amplitudes d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
  return d;
}

double rel_l2(const Amplitudes& a, const Amplitudes& b, double dz) { return l2_norm(minus(a, b), dz) / l2_norm(b, dz); }

WavePacket plane_wave(const Grid1D& g, long mode) {
  Amplitudes a(g.size());
  const double k = 2.0 * kPi * static_cast<double>(mode) / g.length();
  for (std::size_t j = 0; j < g.size(); ++j) a[j] = std::polar(1.0, k * g.coordinate(j));
  return WavePacket(g, std::move(a));
}

// Naive DFT with the physical phase exp(-i p z / hbar).
Amplitudes naive_dft(const WavePacket& psi, double hbar) {
  const Grid1D& g = psi.grid();
  Amplitudes out(g.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      s += std::exp(Complex(0.0, -g.momentum(m, hbar) * g.coordinate(j) / hbar)) * psi[j];
    }
    out[m] = g.spacing() * s;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- packets

TEST(WavePacket, ValidatesInput) {
  const Grid1D g(8, 0.5);
  EXPECT_THROW(WavePacket(g, Amplitudes(7)), std::invalid_argument);
  Amplitudes bad(8);
  bad[2] = Complex(NAN, 0.0);
  EXPECT_THROW(WavePacket(g, bad), std::invalid_argument);
  EXPECT_THROW(WavePacket::gaussian(g, 0.0, 0.0), std::invalid_argument);
}

TEST(WavePacket, GaussianHasUnitNorm) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  EXPECT_NEAR(WavePacket::gaussian(g, 1.0, 1.5, 0.7).norm_squared(), 1.0, 1e-12);
}

TEST(Localize, UnscaledIsIdentityBitForBit) {
  const Grid1D g = Grid1D::centered(256, 20.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.5, 1.2, 1.1);
  const LocalizedPacket lp = localize_packet(psi, FieldSpec::unscaled(), 2.5);
  EXPECT_EQ(lp.packet().amplitudes(), psi.amplitudes());
  EXPECT_EQ(lp.reference(), 2.5);
}

TEST(Localize, PurePhasePreservesModulus) {
  const Grid1D g = Grid1D::centered(256, 20.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.5, 1.2, 1.1);
  const FieldSpec phase = FieldSpec::closed_form({}, {ProfileKind::sine, 1.3, 0.0, 1.0, 0.9});
  const LocalizedPacket lp = localize_packet(psi, phase, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) EXPECT_NEAR(std::abs(lp.packet()[j]), std::abs(psi[j]), 1e-14);
}

TEST(Localize, SpikePicksUpSingleConnectionFactor) {
  const Grid1D g = Grid1D::centered(64, 16.0);
  const FieldSpec f = smooth_field(16.0);
  Amplitudes spike(64);
  spike[40] = Complex(2.0, -1.0);
  const LocalizedPacket lp = localize_packet(WavePacket(g, spike), f, g.coordinate(10));
  const Complex expected = std::exp(f.gamma_at(g.coordinate(40)) - f.gamma_at(g.coordinate(10))) * spike[40];
  EXPECT_NEAR(std::abs(lp.packet()[40] - expected), 0.0, 1e-15);
  EXPECT_EQ(lp.packet()[39], Complex(0.0, 0.0));
}

TEST(Localize, OffGridReferenceThrows) {
  const Grid1D g = Grid1D::centered(64, 16.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 1.0);
  EXPECT_THROW(localize_packet(psi, smooth_field(), 0.1), OffGridError);
  const LocalizedPacket lp = localize_packet(psi, smooth_field(), 0.0);
  EXPECT_THROW(translate_reference(lp, 0.1), OffGridError);
}

TEST(Translate, IdentityRoundTripAndPeak) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  const FieldSpec f = smooth_field();
  const WavePacket psi = WavePacket::gaussian(g, 1.0, 2.0, 0.4);
  const double x = g.coordinate(300), w = g.coordinate(180);
  const LocalizedPacket at_x = localize_packet(psi, f, x);

  EXPECT_EQ(translate_reference(at_x, x).packet().amplitudes(), at_x.packet().amplitudes());

  const LocalizedPacket at_w = translate_reference(at_x, w);
  EXPECT_EQ(at_w.reference(), w);
  EXPECT_EQ(at_w.field().chart_reference(), w);
  const LocalizedPacket back = translate_reference(at_w, x);
  const double scale = max_abs(at_x.packet().amplitudes());
  EXPECT_LE(max_abs(minus(back.packet().amplitudes(), at_x.packet().amplitudes())) / scale, 1e-13);

  const LocalizedPacket direct = localize_packet(psi, f, w);
  EXPECT_LE(max_abs(minus(at_w.packet().amplitudes(), direct.packet().amplitudes())) /
                max_abs(direct.packet().amplitudes()),
            1e-13);

  auto argmax = [](const Amplitudes& a) {
    return std::max_element(a.begin(), a.end(), [](Complex l, Complex r) { return std::abs(l) < std::abs(r); }) -
           a.begin();
  };
  EXPECT_EQ(argmax(at_w.packet().amplitudes()), argmax(at_x.packet().amplitudes()));
}

// ---------------------------------------------------------------- operators

TEST(CentralDifference, RejectsTooFewPoints) {
  const Amplitudes two(2);
  EXPECT_THROW(central_first_derivative(two, 0.1), std::invalid_argument);
  EXPECT_THROW(central_second_derivative(two, 0.1), std::invalid_argument);
}

TEST(CovariantDerivative, ReducesToPlainDerivativeWhenGammaVanishes) {
  const Grid1D g = Grid1D::centered(128, 20.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.3, 1.5, 0.8);
  EXPECT_EQ(covariant_derivative(psi, FieldSpec::unscaled()).amplitudes(),
            central_first_derivative(psi.amplitudes(), g.spacing()));
}

TEST(CovariantDerivative, AnnihilatesCovariantlyConstantSection) {
  const FieldSpec f = smooth_field();
  double r[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(512u << level, 30.0);
    Amplitudes s = f.gamma_on(g);
    for (auto& v : s) v = std::exp(-v);
    const WavePacket section(g, s);
    r[level] = covariant_derivative(section, f).norm() / section.norm();
  }
  EXPECT_LT(r[0], 1e-4);
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.4);
}

TEST(CanonicalMomentum, PlaneWaveHasDiscreteSymbol) {
  const Grid1D g = Grid1D::centered(64, 12.0);
  const PhysicalConstants c{0.7, 1.0};
  for (long mode : {1L, 3L, -5L}) {
    const WavePacket psi = plane_wave(g, mode);
    const double k = 2.0 * kPi * static_cast<double>(mode) / g.length();
    const double symbol = c.hbar * std::sin(k * g.spacing()) / g.spacing();
    const WavePacket p = canonical_momentum_apply(psi, FieldSpec::unscaled(), c);
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_NEAR(std::abs(p[j] - symbol * psi[j]), 0.0, 1e-12);
  }
}

TEST(CanonicalMomentum, PlaneWaveEigenvalueConvergesToHbarK) {
  double gap[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(256u << level, 12.0);
    const WavePacket psi = plane_wave(g, 3);
    const WavePacket p = plain_momentum_apply(psi, PhysicalConstants{});
    const double k = 2.0 * kPi * 3.0 / g.length();
    gap[level] = std::abs(p[0] / psi[0] - k);
  }
  EXPECT_NEAR(gap[0] / gap[1], 4.0, 0.05);
}

TEST(CanonicalMomentum, ConstantConnectionShiftsEigenvalue) {
  const Grid1D g = Grid1D::centered(64, 12.0);
  const double a = 0.4, b = -0.3;  // Gamma = a + i b
  const FieldSpec f = FieldSpec::closed_form({ProfileKind::linear, a}, {ProfileKind::linear, b});
  const WavePacket psi = plane_wave(g, 2);
  const double k = 2.0 * kPi * 2.0 / g.length();
  const Complex expected = std::sin(k * g.spacing()) / g.spacing() - Complex(0.0, 1.0) * Complex(a, b);
  const WavePacket p = canonical_momentum_apply(psi, f, PhysicalConstants{});
  for (std::size_t j = 0; j < g.size(); ++j) EXPECT_NEAR(std::abs(p[j] - expected * psi[j]), 0.0, 1e-12);
}

TEST(CanonicalMomentum, IntertwinesWithPlainMomentum) {
  const FieldSpec f = smooth_field();
  double r[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(512u << level, 30.0);
    const WavePacket psi = WavePacket::gaussian(g, 0.5, 2.0, 0.3);
    const WavePacket lhs = plain_momentum_apply(multiply_by_g(psi, f), PhysicalConstants{});
    const WavePacket rhs = multiply_by_g(canonical_momentum_apply(psi, f, PhysicalConstants{}), f);
    r[level] = rel_l2(lhs.amplitudes(), rhs.amplitudes(), g.spacing());
  }
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.8);
}

TEST(ScaledKinetic, ReducesToPlainKinetic) {
  const Grid1D g = Grid1D::centered(128, 20.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 1.5, 0.5);
  const PhysicalConstants c{1.3, 0.8};
  const WavePacket a = scaled_kinetic_apply(psi, FieldSpec::unscaled(), c);
  const WavePacket b = plain_kinetic_apply(psi, c);
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
  EXPECT_EQ(hamiltonian_apply(psi, FieldSpec::unscaled(), {}, c, HamiltonianForm::scaled).amplitudes(),
            hamiltonian_apply(psi, FieldSpec::unscaled(), {}, c, HamiltonianForm::unscaled).amplitudes());
}

TEST(ScaledKinetic, MatchesSquaredCanonicalMomentum) {
  const FieldSpec f = smooth_field();
  const PhysicalConstants c{1.0, 1.5};
  double r[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(512u << level, 30.0);
    // narrow enough that the periodic wrap stays below rounding
    const WavePacket psi = WavePacket::gaussian(g, 0.5, 1.2, 0.3);
    const WavePacket p2 = canonical_momentum_apply(canonical_momentum_apply(psi, f, c), f, c);
    Amplitudes composed = p2.amplitudes();
    for (auto& v : composed) v /= 2.0 * c.mass;
    r[level] = rel_l2(scaled_kinetic_apply(psi, f, c).amplitudes(), composed, g.spacing());
  }
  EXPECT_LT(r[0], 1e-2);
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.8);
}

TEST(Hamiltonian, OscillatorGroundStateEigenvalue) {
  const PhysicalConstants c{1.0, 2.0};
  const double omega = 0.8;
  double r[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(256u << level, 20.0);
    const double s = std::sqrt(c.hbar / (2.0 * c.mass * omega));
    const WavePacket psi = WavePacket::gaussian(g, 0.0, s);
    const auto v = harmonic_potential(g, omega, 0.0, c);
    Amplitudes expected = psi.amplitudes();
    for (auto& x : expected) x *= 0.5 * c.hbar * omega;
    r[level] = rel_l2(hamiltonian_apply(psi, FieldSpec::unscaled(), v, c, HamiltonianForm::unscaled).amplitudes(),
                      expected, g.spacing());
  }
  EXPECT_LT(r[0], 5e-3);
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.4);
}

TEST(Hamiltonian, RejectsPotentialShapeMismatch) {
  const Grid1D g = Grid1D::centered(64, 10.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 1.0);
  const std::vector<double> v(10, 1.0);
  EXPECT_THROW(hamiltonian_apply(psi, smooth_field(), v, PhysicalConstants{}, HamiltonianForm::scaled),
               std::invalid_argument);
}

TEST(Hamiltonian, OperatorsAreLinear) {
  const Grid1D g = Grid1D::centered(256, 30.0);
  const FieldSpec f = smooth_field();
  const PhysicalConstants c;
  const auto v = harmonic_potential(g, 0.5, 0.0, c);
  const WavePacket psi = WavePacket::gaussian(g, -1.0, 1.5, 0.4);
  const WavePacket phi = WavePacket::gaussian(g, 2.0, 2.5, -0.7);
  const Complex a(0.3, -1.2), b(-2.0, 0.5);
  Amplitudes mix(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) mix[j] = a * psi[j] + b * phi[j];

  const auto check = [&](auto op) {
    const Amplitudes lhs = op(WavePacket(g, mix)).amplitudes();
    const Amplitudes p = op(psi).amplitudes(), q = op(phi).amplitudes();
    Amplitudes rhs(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) rhs[j] = a * p[j] + b * q[j];
    EXPECT_LE(max_abs(minus(lhs, rhs)) / max_abs(rhs), 1e-12);
  };
  check([&](const WavePacket& w) { return covariant_derivative(w, f); });
  check([&](const WavePacket& w) { return canonical_momentum_apply(w, f, c); });
  check([&](const WavePacket& w) { return scaled_kinetic_apply(w, f, c); });
  check([&](const WavePacket& w) { return hamiltonian_apply(w, f, v, c, HamiltonianForm::scaled); });
  check([&](const WavePacket& w) { return localize_packet(w, f, 0.0).packet(); });
}

TEST(Intertwining, ConvergesAtSecondOrder) {
  const FieldSpec f = smooth_field();
  const PhysicalConstants c;
  double r[3];
  for (int level = 0; level < 3; ++level) {
    const Grid1D g = Grid1D::centered(512u << level, 30.0);
    const auto v = harmonic_potential(g, 0.5, 0.0, c);
    r[level] = intertwining_residual(WavePacket::gaussian(g, 0.0, 2.0), f, v, c);
  }
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.8);
  EXPECT_NEAR(r[1] / r[2], 4.0, 0.8);
}

TEST(LocalizationCommutes, UnscaledIsExactAndPotentialAloneIsTiny) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  const PhysicalConstants c;
  const auto v = harmonic_potential(g, 0.5, 0.0, c);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 2.0, 0.3);
  EXPECT_EQ(localization_commutes_check(psi, FieldSpec::unscaled(), v, 3.75, c), 0.0);
  EXPECT_LE(localization_commutes_check(psi, smooth_field(), v, 3.75, c, HamiltonianTerms{false, true}), 1e-14);
}

TEST(LocalizationCommutes, ConvergesAtSecondOrder) {
  const FieldSpec f = smooth_field();
  const PhysicalConstants c;
  double r[2];
  for (int level = 0; level < 2; ++level) {
    const Grid1D g = Grid1D::centered(512u << level, 30.0);
    r[level] = localization_commutes_check(WavePacket::gaussian(g, 0.0, 2.0), f, {}, -1.875, c);
  }
  EXPECT_NEAR(r[0] / r[1], 4.0, 0.8);
}

// ---------------------------------------------------------------- momentum

TEST(Momentum, TransformMatchesNaiveDft) {
  const Grid1D g(64, 0.3, -7.1);
  const PhysicalConstants c{0.6, 1.0};
  const WavePacket psi = WavePacket::gaussian(g, -2.0, 1.1, 1.7);
  const Amplitudes expected = naive_dft(psi, c.hbar);
  const MomentumAmplitudes got = to_momentum(psi);
  EXPECT_LE(max_abs(minus(got.values, expected)) / max_abs(expected), 1e-12);
  EXPECT_EQ(got.at_mode(-1), got.values[63]);
  EXPECT_THROW(got.at_mode(32), std::out_of_range);
}

TEST(Momentum, RoundTripAndParseval) {
  const Grid1D g(128, 0.2, -11.0);
  const WavePacket psi = WavePacket::gaussian(g, 1.0, 1.3, -0.9);
  const MomentumAmplitudes hat = to_momentum(psi);
  EXPECT_LE(max_abs(minus(from_momentum(hat).amplitudes(), psi.amplitudes())), 1e-14);
  std::vector<double> abs2(hat.values.size());
  for (std::size_t m = 0; m < abs2.size(); ++m) abs2[m] = std::norm(hat.values[m]);
  EXPECT_NEAR(pairwise_sum(abs2) / g.length(), psi.norm_squared(), 1e-12);
}

TEST(Momentum, UnscaledKernelIsExactlyLDelta) {
  const Grid1D g(32, 0.37, -3.3);
  const MomentumKernel k = momentum_kernel(FieldSpec::unscaled(), g);
  EXPECT_EQ(k.values().size(), 63u);
  EXPECT_EQ(k.at(0), Complex(g.length(), 0.0));
  for (long d = -31; d <= 31; ++d) {
    if (d != 0) EXPECT_EQ(k.at(d), Complex(0.0, 0.0)) << d;
  }
  EXPECT_THROW(k.at(32), std::out_of_range);
}

TEST(Momentum, KernelMatchesDirectSum) {
  const Grid1D g(32, 0.5, -8.0);
  const FieldSpec f = smooth_field(16.0);
  const MomentumKernel k = momentum_kernel(f, g);
  for (long d = -31; d <= 31; ++d) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      s += std::exp(Complex(0.0, 2.0 * kPi * static_cast<double>(d) * g.coordinate(j) / g.length()) +
                    f.gamma_at(g.coordinate(j)));
    }
    EXPECT_NEAR(std::abs(k.at(d) - g.spacing() * s), 0.0, 1e-12 * g.length()) << d;
  }
}

TEST(Momentum, ConvolutionReproducesLocalizedTransform) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  const FieldSpec f = smooth_field();
  const WavePacket psi = WavePacket::gaussian(g, 0.5, 2.0, 0.8);
  const double x = 3.75;
  const MomentumAmplitudes direct = localized_momentum_representation(psi, f, x);
  const MomentumAmplitudes conv = convolve_with_kernel(momentum_kernel(f, g), to_momentum(psi), f.gamma_at(x));
  EXPECT_LE(max_abs(minus(conv.values, direct.values)) / max_abs(direct.values), 1e-10);
}

TEST(Momentum, ConstantPhaseFieldIsUniformPhase) {
  const Grid1D g = Grid1D::centered(64, 10.0);
  const double theta = 0.9;
  const FieldSpec f = FieldSpec::closed_form({}, {ProfileKind::constant, theta});
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 1.0, 0.5);
  // the reference fiber cancels the constant exactly
  EXPECT_EQ(localized_momentum_representation(psi, f, 0.0).values, to_momentum(psi).values);
  const MomentumKernel k = momentum_kernel(f, g);
  EXPECT_NEAR(std::abs(k.at(0) - g.length() * std::polar(1.0, theta)), 0.0, 1e-12);
}

TEST(Momentum, FirstOrderKernelErrorIsQuadratic) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  double r[2];
  const double eps[2] = {1e-2, 1e-3};
  for (int i = 0; i < 2; ++i) {
    const FieldSpec f = smooth_field().scaled(eps[i]);
    const auto full = momentum_kernel(f, g).values();
    const auto lin = linearized_kernel(f, g).values();
    r[i] = l2_norm(minus(full, lin), 1.0);
  }
  EXPECT_LE(std::abs(std::log2(r[0] / r[1] / 100.0)), 1.0);
}

TEST(Momentum, Expm1ComplexIsAccurate) {
  for (Complex z : {Complex(1e-9, 2e-9), Complex(0.3, -0.7), Complex(-2.0, 3.0), Complex(0.0, 1e-12)}) {
    const Complex ref = std::exp(z) - 1.0;
    EXPECT_NEAR(std::abs(detail::expm1_complex(z) - ref), 0.0, 1e-15 + 1e-15 * std::abs(ref));
  }
  EXPECT_NEAR(detail::expm1_complex(Complex(1e-12, 0.0)).real(), std::expm1(1e-12), 1e-27);
}

// ---------------------------------------------------------------- evolution

TEST(Evolution, AssembledMatrixMatchesOperator) {
  const Grid1D g = Grid1D::centered(256, 30.0);
  const FieldSpec f = smooth_field();
  const PhysicalConstants c{0.9, 1.4};
  const auto v = harmonic_potential(g, 0.5, 0.0, c);
  const WavePacket psi = WavePacket::gaussian(g, 0.3, 2.0, 0.6);
  for (HamiltonianForm form : {HamiltonianForm::scaled, HamiltonianForm::unscaled}) {
    const TridiagonalOperator H = assemble_hamiltonian(g, f, v, c, form);
    const Amplitudes expected = hamiltonian_apply(psi, f, v, c, form).amplitudes();
    EXPECT_LE(max_abs(minus(H.apply(psi.amplitudes()), expected)) / max_abs(expected), 1e-12);
  }
}

TEST(Evolution, FreeGaussianMatchesClosedForm) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  const double s = 2.0, t = 0.1;
  const PhysicalConstants c;
  const WavePacket out =
      evolve(WavePacket::gaussian(g, 0.0, s), FieldSpec::unscaled(), {}, c, {1e-3, 100, HamiltonianForm::unscaled});
  const Complex a(s * s, t / 2.0);
  Amplitudes exact(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double z = g.coordinate(j);
    exact[j] = std::pow(2.0 * kPi * s * s, -0.25) * std::sqrt(Complex(s * s) / a) * std::exp(-z * z / (4.0 * a));
  }
  EXPECT_LE(rel_l2(out.amplitudes(), exact, g.spacing()), 1e-6);
}

TEST(Evolution, UnscaledCrankNicolsonIsUnitary) {
  const Grid1D g = Grid1D::centered(512, 30.0);
  const PhysicalConstants c;
  const auto v = harmonic_potential(g, 0.5, 1.0, c);
  const CrankNicolsonPropagator step(assemble_hamiltonian(g, FieldSpec::unscaled(), v, c, HamiltonianForm::unscaled),
                                     1e-3, c);
  Amplitudes state = WavePacket::gaussian(g, -1.0, 1.5, 1.0).amplitudes();
  double before = l2_norm(state, g.spacing());
  for (int s = 0; s < 50; ++s) {
    state = step.step(state);
    const double after = l2_norm(state, g.spacing());
    EXPECT_LE(std::abs(after - before) / before, 1e-10);
    before = after;
  }
}

TEST(Evolution, IntertwinedEvolutionAgrees) {
  const Grid1D g = Grid1D::centered(1024, 30.0);
  const FieldSpec f = smooth_field();
  const PhysicalConstants c;
  const auto v = harmonic_potential(g, 0.5, 0.0, c);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 2.0);
  const WavePacket lhs = evolve(multiply_by_g(psi, f), f, v, c, {1e-3, 100, HamiltonianForm::unscaled});
  const WavePacket rhs = multiply_by_g(evolve(psi, f, v, c, {1e-3, 100, HamiltonianForm::scaled}), f);
  EXPECT_LE(rel_l2(lhs.amplitudes(), rhs.amplitudes(), g.spacing()), 1e-6);
}

TEST(Evolution, RejectsBadStep) {
  const Grid1D g = Grid1D::centered(64, 10.0);
  const auto H = assemble_hamiltonian(g, FieldSpec::unscaled(), {}, PhysicalConstants{}, HamiltonianForm::unscaled);
  EXPECT_THROW(CrankNicolsonPropagator(H, 0.0, PhysicalConstants{}), std::invalid_argument);
  EXPECT_THROW(CrankNicolsonPropagator(H, -1e-3, PhysicalConstants{}), std::invalid_argument);
  const std::vector<double> v(3);
  EXPECT_THROW(assemble_hamiltonian(g, FieldSpec::unscaled(), v, PhysicalConstants{}, HamiltonianForm::scaled),
               std::invalid_argument);
}

TEST(Evolution, ZeroStepsIsIdentity) {
  const Grid1D g = Grid1D::centered(64, 10.0);
  const WavePacket psi = WavePacket::gaussian(g, 0.0, 1.0);
  EXPECT_EQ(evolve(psi, smooth_field(10.0), {}, PhysicalConstants{}, {1e-3, 0}).amplitudes(), psi.amplitudes());
}
