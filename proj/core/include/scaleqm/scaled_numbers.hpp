#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scaleqm/complex_value.hpp"

namespace scaleqm {

/// Nonzero complex factor labelling a scaled number structure.
template <ScalarBackend T>
class ScalingFactor {
 public:
  explicit ScalingFactor(ComplexValue<T> value) : value_(std::move(value)) {
    if (value_.is_zero()) throw std::invalid_argument("scaling factor must be nonzero");
  }
  ScalingFactor(T real) : ScalingFactor(ComplexValue<T>(std::move(real))) {}  // NOLINT

  static ScalingFactor unit() { return ScalingFactor(ComplexValue<T>(T(1))); }

  const ComplexValue<T>& value() const { return value_; }

  friend bool operator==(const ScalingFactor&, const ScalingFactor&) = default;

 private:
  ComplexValue<T> value_;
};

/// A number a_t: the value it carries inside its own structure plus the level t.
/// The base-set element itself is never materialized; (value, level) fixes it.
template <ScalarBackend T>
class ScaledNumber {
 public:
  ScaledNumber(ComplexValue<T> value, ScalingFactor<T> level)
      : value_(std::move(value)), level_(std::move(level)) {}

  const ComplexValue<T>& value() const { return value_; }
  const ScalingFactor<T>& level() const { return level_; }

 private:
  ComplexValue<T> value_;
  ScalingFactor<T> level_;
};

/// v_t(a_t) = a.
template <ScalarBackend T>
const ComplexValue<T>& value_of(const ScaledNumber<T>& a) {
  return a.value();
}

/// v_s(a_t) = (t/s) a.
template <ScalarBackend T>
ComplexValue<T> relative_value(const ScaledNumber<T>& a, const ScalingFactor<T>& s) {
  if (a.level() == s) return a.value();
  return (a.level().value() / s.value()) * a.value();
}

/// Representation of a_t inside the s-structure: (t_s/s_s) a_s. The map is the
/// identity on the base set, so this coincides numerically with relative_value.
template <ScalarBackend T>
ComplexValue<T> project_to_structure(const ScaledNumber<T>& a, const ScalingFactor<T>& s) {
  return relative_value(a, s);
}

/// Structure-group action: same value, level multiplied by d.
template <ScalarBackend T>
ScaledNumber<T> level_shift(const ScalingFactor<T>& d, const ScaledNumber<T>& a) {
  return ScaledNumber<T>(a.value(), ScalingFactor<T>(d.value() * a.level().value()));
}

/// Components of the t-structure expressed in the s-structure.
///
/// With r = t/s: multiplication is (1/r)x*y, the identity is r, conjugation is
/// x -> r*conj(x/r) and embed(a) = r*a maps the plain field isomorphically onto
/// this one. The prefactor r is not conjugated by rel_conj; that is the rule
/// under which (x*)* = x and the identity is self-conjugate.
template <ScalarBackend T>
class RelativeStructure {
 public:
  RelativeStructure(ScalingFactor<T> upper, ScalingFactor<T> lower)
      : upper_(std::move(upper)), lower_(std::move(lower)),
        ratio_(upper_.value() / lower_.value()) {}

  const ScalingFactor<T>& upper() const { return upper_; }
  const ScalingFactor<T>& lower() const { return lower_; }
  /// t/s
  const ComplexValue<T>& ratio() const { return ratio_; }

  ComplexValue<T> zero() const { return {}; }
  ComplexValue<T> one() const { return ratio_; }
  ComplexValue<T> add(const ComplexValue<T>& x, const ComplexValue<T>& y) const { return x + y; }
  ComplexValue<T> mul(const ComplexValue<T>& x, const ComplexValue<T>& y) const { return (x * y) / ratio_; }
  ComplexValue<T> conj(const ComplexValue<T>& x) const { return ratio_ * scaleqm::conj(x / ratio_); }
  /// Multiplicative inverse under mul: r^2 / x.
  ComplexValue<T> inverse(const ComplexValue<T>& x) const { return (ratio_ * ratio_) / x; }
  ComplexValue<T> embed(const ComplexValue<T>& a) const { return ratio_ * a; }

 private:
  ScalingFactor<T> upper_;
  ScalingFactor<T> lower_;
  ComplexValue<T> ratio_;
};

template <ScalarBackend T>
ComplexValue<T> rel_one(const RelativeStructure<T>& r) { return r.one(); }
template <ScalarBackend T>
ComplexValue<T> rel_mul(const RelativeStructure<T>& r, const ComplexValue<T>& x, const ComplexValue<T>& y) {
  return r.mul(x, y);
}
template <ScalarBackend T>
ComplexValue<T> rel_conj(const RelativeStructure<T>& r, const ComplexValue<T>& x) {
  return r.conj(x);
}

template <ScalarBackend T>
class ScaledVector {
 public:
  ScaledVector(std::vector<ComplexValue<T>> components, ScalingFactor<T> level)
      : components_(std::move(components)), level_(std::move(level)) {}

  std::size_t dimension() const { return components_.size(); }
  const std::vector<ComplexValue<T>>& components() const { return components_; }
  const ComplexValue<T>& operator[](std::size_t i) const { return components_[i]; }
  const ScalingFactor<T>& level() const { return level_; }

 private:
  std::vector<ComplexValue<T>> components_;
  ScalingFactor<T> level_;
};

/// Vector embedding f -> (t/s) f.
template <ScalarBackend T>
ScaledVector<T> embed(const RelativeStructure<T>& r, const ScaledVector<T>& f) {
  std::vector<ComplexValue<T>> out;
  out.reserve(f.dimension());
  for (const auto& c : f.components()) out.push_back(r.embed(c));
  return ScaledVector<T>(std::move(out), f.level());
}

/// The scaled scalar-vector product: componentwise (s/t) a f_i.
template <ScalarBackend T>
ScaledVector<T> scaled_scalar_mul(const RelativeStructure<T>& r, const ComplexValue<T>& a,
                                  const ScaledVector<T>& f) {
  std::vector<ComplexValue<T>> out;
  out.reserve(f.dimension());
  for (const auto& c : f.components()) out.push_back(r.mul(a, c));
  return ScaledVector<T>(std::move(out), f.level());
}

/// (t/s) * sum_i conj(f_i) g_i.
template <ScalarBackend T>
ComplexValue<T> scaled_inner(const RelativeStructure<T>& r, const ScaledVector<T>& f,
                             const ScaledVector<T>& g) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument("scaled_inner: dimension mismatch");
  }
  ComplexValue<T> sum;
  for (std::size_t i = 0; i < f.dimension(); ++i) sum = sum + conj(f[i]) * g[i];
  return r.ratio() * sum;
}

}  // namespace scaleqm
