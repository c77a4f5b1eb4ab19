#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <type_traits>

#include "scaleqm/rational.hpp"

namespace scaleqm {

enum class Backend { exact, floating };

template <class T>
struct backend_of;
template <>
struct backend_of<Rational> : std::integral_constant<Backend, Backend::exact> {};
template <>
struct backend_of<double> : std::integral_constant<Backend, Backend::floating> {};

template <class T>
concept ScalarBackend = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

/// Complex number over an exact (GMP rational) or IEEE double backend.
///
/// std::complex<T> is only specified for floating types, so the exact backend
/// needs its own carrier. Every result is materialized into T before it is
/// stored, which keeps GMP expression templates from escaping.
template <ScalarBackend T>
struct ComplexValue {
  T re{};
  T im{};

  ComplexValue() = default;
  ComplexValue(T real) : re(std::move(real)), im(0) {}  // NOLINT(google-explicit-constructor)
  ComplexValue(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

  static constexpr Backend backend = backend_of<T>::value;

  bool is_zero() const { return re == 0 && im == 0; }

  friend ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
    return {T(a.re + b.re), T(a.im + b.im)};
  }
  friend ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
    return {T(a.re - b.re), T(a.im - b.im)};
  }
  friend ComplexValue operator-(const ComplexValue& a) { return {T(-a.re), T(-a.im)}; }
  friend ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
    return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
  }
  friend ComplexValue operator/(const ComplexValue& a, const ComplexValue& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    const T denom = T(b.re * b.re + b.im * b.im);
    return {T((a.re * b.re + a.im * b.im) / denom), T((a.im * b.re - a.re * b.im) / denom)};
  }
  friend bool operator==(const ComplexValue& a, const ComplexValue& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const ComplexValue& z) {
    if constexpr (std::is_same_v<T, Rational>) {
      return os << '(' << to_fraction_string(z.re) << ", " << to_fraction_string(z.im) << ')';
    } else {
      return os << '(' << z.re << ", " << z.im << ')';
    }
  }
};

using ExactComplex = ComplexValue<Rational>;
using FloatComplex = ComplexValue<double>;

template <ScalarBackend T>
ComplexValue<T> conj(const ComplexValue<T>& z) {
  return {z.re, T(-z.im)};
}

/// Squared modulus, exact for the rational backend.
template <ScalarBackend T>
T norm(const ComplexValue<T>& z) {
  return T(z.re * z.re + z.im * z.im);
}

inline FloatComplex to_float(const ExactComplex& z) { return {to_double(z.re), to_double(z.im)}; }
inline std::complex<double> to_std(const FloatComplex& z) { return {z.re, z.im}; }
inline FloatComplex from_std(std::complex<double> z) { return {z.real(), z.imag()}; }

/// |a - b| / max(|a|, |b|), with 0 when both vanish.
inline double relative_difference(const FloatComplex& a, const FloatComplex& b) {
  const double scale = std::max(std::abs(to_std(a)), std::abs(to_std(b)));
  const double diff = std::abs(to_std(a) - to_std(b));
  return scale == 0.0 ? diff : diff / scale;
}

}  // namespace scaleqm
