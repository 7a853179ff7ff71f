#pragma once

#include <functional>
#include <string>
#include <vector>

#include "focklat/lattice.hpp"
#include "focklat/lattice_fn.hpp"

namespace focklat {

/// Residuals of the normalized magnitude |F(lambda)| e^{-pi |lambda|^2 / 2}
/// over all lattice points in a ball.
struct VanishingReport {
  double lattice_radius = 0.0;
  long checked_points = 0;
  double max_normalized_residual = 0.0;
  VectorXcd worst_point;
};

struct InterpolationReport {
  double lattice_radius = 0.0;
  long checked_points = 0;  // off-origin points
  LogComplex origin_value;
  bool origin_nonzero = false;
  double max_offorigin_residual = 0.0;
  VectorXcd worst_point;
  std::string diagnostic;  // nonempty when the origin value is exactly zero
};

/// Per-shell suprema of the normalized magnitude on a uniform Cartesian
/// grid: sup_normalized[k] is taken over grid points with
/// |z| in (radii[k] - grid_step, radii[k]].
struct GrowthProfile {
  std::vector<double> radii;
  std::vector<double> sup_normalized;
  double grid_step = 0.0;

  double max_value() const;
  /// Supremum over shells with radius <= r.
  double max_up_to(double r) const;
  /// Supremum over the single shell containing radius r.
  double value_at(double r) const;
};

VanishingReport check_vanishing(const LatticeFn& f, const ComplexLattice& lat,
                                double radius, const SigmaEvaluator& ev = default_sigma());

InterpolationReport check_interpolating(const LatticeFn& f, const ComplexLattice& lat,
                                        double radius,
                                        const SigmaEvaluator& ev = default_sigma());

/// Deterministic shell suprema of |F(z)| e^{-pi |z|^2 / 2} over the uniform
/// grid (grid_step Z)^{2d} intersected with the |z| <= max_radius ball.
/// Functions whose factors each depend on a single complex coordinate are
/// evaluated through per-coordinate tables (the full product grid is only
/// combined additively), everything else falls back to a direct scan.
/// Parallelism is capped by the FOCKLAT_THREADS environment variable.
GrowthProfile estimate_growth(const LatticeFn& f, double max_radius, double grid_step,
                              const SigmaEvaluator& ev = default_sigma());

/// Midpoint-rule approximation of int_{|z|<=radius} |F(z)|^2 e^{-pi |z|^2} dz
/// over C^d (cells of side grid_step in every real coordinate, a cell counts
/// when its center lies in the ball).
double f2_quadrature(const LatticeFn& f, double radius, double grid_step,
                     const SigmaEvaluator& ev = default_sigma());

/// Weight convention of the truncated Lagrange sum. The full Gaussian weight
/// e^{-pi |lambda|^2} together with the covolume factor |det A|^2 is the one
/// that reproduces constants; the half weight e^{-pi |lambda|^2 / 2} is kept
/// selectable so the suite can record that it does not.
enum class LagrangeWeight { kFull, kHalf };

struct LagrangeTrace {
  std::vector<double> radii;
  std::vector<Complex> partial_sums;
};

using SampleFn = std::function<Complex(const VectorXcd&)>;

/// Truncated weak Lagrange sum
///   |det A|^2 sum_{lambda in Lambda, |lambda| <= R}
///       F(lambda) e^{pi <z, lambda>} G(z - lambda) w(lambda)
/// with w per the chosen weight; terms are accumulated in order of
/// increasing |lambda| and partial sums are recorded at every integer
/// radius when trace is non-null.
Complex lagrange_reconstruct(const SampleFn& samples, const LatticeFn& g,
                             const ComplexLattice& lat,
                             const Eigen::Ref<const VectorXcd>& z, double trunc_radius,
                             LagrangeWeight weight = LagrangeWeight::kFull,
                             LagrangeTrace* trace = nullptr,
                             const SigmaEvaluator& ev = default_sigma());

/// |<phi, pi_lambda phi>| for the Gaussian window phi(x) = e^{-pi |x|^2},
/// computed by real-variable quadrature and by the closed Bargmann-side
/// expression 2^{-d/2} e^{-pi |lambda|^2 / 2}.
struct BargmannBridge {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double discrepancy() const { return std::abs(quadrature - closed_form); }
};

BargmannBridge bargmann_coefficient(const Eigen::Ref<const VectorXcd>& lambda);

/// Thread cap from FOCKLAT_THREADS (>= 1; hardware concurrency when unset).
int thread_cap();

}  // namespace focklat
