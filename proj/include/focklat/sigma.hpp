#pragma once

#include <complex>
#include <functional>

#include "focklat/log_complex.hpp"

namespace focklat {

using Complex = std::complex<double>;

/// Entire function of one complex variable evaluated in the log domain.
using ScalarFn = std::function<LogComplex(Complex)>;

/// Weierstrass sigma function of the unit square lattice Z[i].
///
/// Fast path: quasi-periodic argument reduction
///     sigma(z0 + k) = eps(k) sigma(z0) e^{pi conj(k)(z0 + k/2)},
/// with eps(k) = +1 iff both components of k are even, followed by a
/// theta-series evaluation on the fundamental cell. The quasi-period
/// constant eta(k) = pi conj(k) is an ansatz for Z[i]; it is validated at
/// construction against the truncated-product reference and the evaluator
/// refuses to construct if the two paths disagree.
class SigmaEvaluator {
 public:
  struct Params {
    int truncation_order = 60;   // radius of the reference product
    double snap_tol = 1e-12;     // dist(z, Z[i]) below which sigma is exactly 0
  };

  SigmaEvaluator() : SigmaEvaluator(Params{}) {}
  explicit SigmaEvaluator(Params params);

  /// sigma(z); exact zero (log_mag = -inf) when dist(z, Z[i]) <= snap_tol.
  LogComplex sigma(Complex z) const;

  /// tau(z) = sigma(z)/z with tau(0) = 1; zero on Z[i] \ {0}.
  LogComplex tau(Complex z) const;

  /// Truncated Weierstrass product over 0 < |lambda| <= N with the classical
  /// convergence factors, plus the analytic tail
  ///     -sum_j z^{4j}/(4j) T_{4j}(N),   T_k(N) = sum_{|lambda|>N} lambda^{-k},
  /// evaluated from the closed-form Eisenstein values of Z[i] (terms 4j > 12
  /// are below 1e-15 for |z| <= 5). Without the tail the plain N = 60 product
  /// is only ~2e-4 accurate near |z| = 5. Independent of the fast path.
  LogComplex sigma_product_reference(Complex z, int truncation_order) const;
  LogComplex sigma_product_reference(Complex z) const {
    return sigma_product_reference(z, params_.truncation_order);
  }

  double snap_tol() const { return params_.snap_tol; }
  int truncation_order() const { return params_.truncation_order; }

  /// Eisenstein series G_k(Z[i]) = sum_{lambda != 0} lambda^{-k} for
  /// k in {4, 8, 12} (real; odd and non-multiple-of-4 orders vanish).
  static double eisenstein(int k);

 private:
  // sigma on the cell |Re z|, |Im z| <= 1/2, as an ordinary complex number
  // (|sigma| <= 0.84 there).
  static Complex cell_value(Complex z);

  void validate_quasi_period_ansatz() const;

  Params params_;
};

/// Process-wide evaluator with default parameters.
const SigmaEvaluator& default_sigma();

inline LogComplex sigma(Complex z) { return default_sigma().sigma(z); }
inline LogComplex tau(Complex z) { return default_sigma().tau(z); }

/// Fock shift of a scalar entire function:
///     (beta_zeta f)(z) = e^{pi conj(zeta) z - pi |zeta|^2 / 2} f(z - zeta).
/// Isometry for the normalized magnitude.
ScalarFn fock_shift(Complex zeta, ScalarFn f);

/// |f(z)| e^{-pi |z|^2 / 2} for a scalar function, log-domain throughout.
double normalized_magnitude(const ScalarFn& f, Complex z);

/// Normalized magnitude of an already-evaluated value at a point with
/// |z|^2 = abs2 (works for any dimension).
inline double normalized_magnitude(const LogComplex& value, double abs2) {
  if (value.is_zero()) return 0.0;
  return std::exp(value.log_mag - M_PI * abs2 / 2.0);
}

}  // namespace focklat
