#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "scaleqm/scaled_numbers.hpp"

namespace scaleqm {

struct AxiomResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest relative defect seen (always 0 for passing exact runs).
  double worst_defect = 0.0;

  bool passed() const { return failures == 0; }
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed(); });
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

template <ScalarBackend T>
struct AxiomSuiteOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  /// Relative tolerance for the floating backend; ignored for exact runs.
  double tolerance = 1e-12;
  /// When unset, each sample draws its own random (t, s) pair.
  std::optional<ScalingFactor<T>> upper;
  std::optional<ScalingFactor<T>> lower;
};

/// Builds the algebra under test for a given (t, s); replaceable for mutation checks.
template <ScalarBackend T>
struct RelativeStructureFactory {
  RelativeStructure<T> operator()(const ScalingFactor<T>& t, const ScalingFactor<T>& s) const {
    return RelativeStructure<T>(t, s);
  }
};

namespace detail {

/// Small complex rationals: numerators in [-99, 99], denominators in [1, 25].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    Rational q(num_(rng_), den_(rng_));
    q.canonicalize();
    return q;
  }
  ExactComplex complex() { return {rational(), rational()}; }
  ExactComplex nonzero_complex() {
    for (;;) {
      auto z = complex();
      if (!z.is_zero()) return z;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_{-99, 99};
  std::uniform_int_distribution<long> den_{1, 25};
};

template <ScalarBackend T>
ComplexValue<T> convert(const ExactComplex& z) {
  if constexpr (std::is_same_v<T, Rational>) {
    return z;
  } else {
    return to_float(z);
  }
}

template <ScalarBackend T>
double defect(const ComplexValue<T>& lhs, const ComplexValue<T>& rhs) {
  if constexpr (std::is_same_v<T, Rational>) {
    return lhs == rhs ? 0.0 : 1.0;
  } else {
    return relative_difference(lhs, rhs);
  }
}

}  // namespace detail

/// Randomized check of the field-with-involution axioms in a relative
/// structure, plus the value-map identities that tie scaled numbers to it.
///
/// Exact runs compare with ==; floating runs accept relative defects up to
/// options.tolerance.
template <ScalarBackend T, class Factory = RelativeStructureFactory<T>>
AxiomReport run_axiom_suite(const AxiomSuiteOptions<T>& options, Factory make_algebra = {}) {
  if (options.samples == 0) throw std::invalid_argument("axiom suite needs at least one sample");

  static const char* const kNames[] = {
      "add_associative",       "add_commutative",     "add_identity",         "add_inverse",
      "mul_associative",       "mul_commutative",     "mul_identity",         "mul_inverse",
      "distributive",          "conj_involution",     "conj_additive",        "conj_multiplicative",
      "conj_fixes_identity",   "embed_additive",      "embed_multiplicative", "embed_conjugation",
      "value_map_scaling",     "projection_composes", "zero_fixed_point",
  };
  AxiomReport report;
  for (const char* name : kNames) report.results.push_back({name});

  const double tol = std::is_same_v<T, Rational> ? 0.0 : options.tolerance;
  auto record = [&](std::size_t index, const ComplexValue<T>& lhs, const ComplexValue<T>& rhs) {
    auto& r = report.results[index];
    ++r.trials;
    const double d = detail::defect(lhs, rhs);
    r.worst_defect = std::max(r.worst_defect, d);
    if (d > tol) ++r.failures;
  };

  detail::RationalSampler sampler(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const ScalingFactor<T> t = options.upper ? *options.upper
                                             : ScalingFactor<T>(detail::convert<T>(sampler.nonzero_complex()));
    const ScalingFactor<T> s = options.lower ? *options.lower
                                             : ScalingFactor<T>(detail::convert<T>(sampler.nonzero_complex()));
    const ScalingFactor<T> u(detail::convert<T>(sampler.nonzero_complex()));
    const auto alg = make_algebra(t, s);

    const auto a = detail::convert<T>(sampler.complex());
    const auto b = detail::convert<T>(sampler.complex());
    const auto x = detail::convert<T>(sampler.complex());
    const auto y = detail::convert<T>(sampler.complex());
    const auto z = detail::convert<T>(sampler.complex());
    const auto nz = detail::convert<T>(sampler.nonzero_complex());

    record(0, alg.add(alg.add(x, y), z), alg.add(x, alg.add(y, z)));
    record(1, alg.add(x, y), alg.add(y, x));
    record(2, alg.add(alg.zero(), x), x);
    record(3, alg.add(x, -x), alg.zero());
    record(4, alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)));
    record(5, alg.mul(x, y), alg.mul(y, x));
    record(6, alg.mul(alg.one(), x), x);
    record(7, alg.mul(nz, alg.inverse(nz)), alg.one());
    record(8, alg.mul(x, alg.add(y, z)), alg.add(alg.mul(x, y), alg.mul(x, z)));
    record(9, alg.conj(alg.conj(x)), x);
    record(10, alg.conj(alg.add(x, y)), alg.add(alg.conj(x), alg.conj(y)));
    record(11, alg.conj(alg.mul(x, y)), alg.mul(alg.conj(x), alg.conj(y)));
    record(12, alg.conj(alg.one()), alg.one());
    record(13, alg.embed(a + b), alg.add(alg.embed(a), alg.embed(b)));
    record(14, alg.embed(a * b), alg.mul(alg.embed(a), alg.embed(b)));
    record(15, alg.embed(conj(a)), alg.conj(alg.embed(a)));

    const ScaledNumber<T> at(a, t);
    const ScaledNumber<T> as(a, s);
    record(16, relative_value(at, s), (t.value() / s.value()) * value_of(at));
    record(16, relative_value(at, t), value_of(at));
    record(16, relative_value(as, t), (s.value() / t.value()) * a);

    const ScaledNumber<T> au(a, u);
    const ScaledNumber<T> via_t(project_to_structure(au, t), t);
    record(17, project_to_structure(via_t, s), project_to_structure(au, s));

    record(18, relative_value(ScaledNumber<T>(ComplexValue<T>{}, t), s), ComplexValue<T>{});
  }
  return report;
}

}  // namespace scaleqm
