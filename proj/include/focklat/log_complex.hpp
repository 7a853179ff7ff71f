#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace focklat {

/// Complex value stored as (log magnitude, phase). Survives the
/// e^{pi |z|^2 / 2} growth of sigma-type products that overflows double.
/// log_mag = -inf encodes an exact (analytic) zero, which absorbs under
/// multiplication; phase lives in (-pi, pi].
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex zero() { return {}; }
  static LogComplex one() { return {0.0, 0.0}; }

  static LogComplex from_complex(std::complex<double> v) {
    if (v == std::complex<double>(0.0, 0.0)) return zero();
    return {std::log(std::abs(v)), std::arg(v)};
  }

  /// exp of a plain complex exponent: e^{w}.
  static LogComplex from_exponent(std::complex<double> w) {
    return {w.real(), wrap_phase(w.imag())};
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  double magnitude() const { return is_zero() ? 0.0 : std::exp(log_mag); }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mag), phase);
  }

  LogComplex& operator*=(const LogComplex& o) {
    if (is_zero() || o.is_zero()) {
      *this = zero();
    } else {
      log_mag += o.log_mag;
      phase = wrap_phase(phase + o.phase);
    }
    return *this;
  }
  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }

  LogComplex& operator/=(const LogComplex& o) {
    if (is_zero()) return *this;
    log_mag -= o.log_mag;
    phase = wrap_phase(phase - o.phase);
    return *this;
  }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }

  static double wrap_phase(double p) {
    if (p > -M_PI && p <= M_PI) return p;
    p = std::fmod(p, 2.0 * M_PI);
    if (p <= -M_PI) p += 2.0 * M_PI;
    if (p > M_PI) p -= 2.0 * M_PI;
    return p;
  }
};

}  // namespace focklat
