#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "focklat/sigma.hpp"

using namespace focklat;

namespace {

double rel_err(const LogComplex& a, const LogComplex& b) {
  const Complex va = a.to_complex();
  const Complex vb = b.to_complex();
  // Compare in the log domain when magnitudes overflow double.
  if (std::isfinite(std::abs(va)) && std::isfinite(std::abs(vb)) &&
      std::abs(vb) > 1e-300)
    return std::abs(va - vb) / std::abs(vb);
  const double dm = std::abs(a.log_mag - b.log_mag);
  const double dp = std::abs(LogComplex::wrap_phase(a.phase - b.phase));
  return std::max(dm, dp);
}

}  // namespace

TEST_CASE("fast path matches the tail-corrected product reference") {
  const SigmaEvaluator& ev = default_sigma();
  std::mt19937 rng(20240814);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int checked = 0;
  double worst = 0.0;
  while (checked < 200) {
    const Complex z(5.0 * unit(rng), 5.0 * unit(rng));
    if (std::abs(z) > 5.0) continue;
    // The reference product is not snapped; stay away from the zeros where
    // the relative error is undefined.
    const Complex nearest(std::round(z.real()), std::round(z.imag()));
    if (std::abs(z - nearest) < 1e-3) continue;
    ++checked;
    worst = std::max(worst, rel_err(ev.sigma(z), ev.sigma_product_reference(z)));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("normalized magnitude is Z[i]-periodic") {
  const SigmaEvaluator& ev = default_sigma();
  std::mt19937 rng(20240815);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  for (int k = 0; k < 100; ++k) {
    const Complex z(unit(rng), unit(rng));
    const Complex lam(rng() % 7 - 3.0, rng() % 7 - 3.0);
    const double at_z = ev.sigma(z).log_mag - M_PI * std::norm(z) / 2.0;
    const double at_shift =
        ev.sigma(z + lam).log_mag - M_PI * std::norm(z + lam) / 2.0;
    CHECK(std::abs(at_z - at_shift) <= 1e-8 * (1.0 + std::abs(at_z)));
  }
}

TEST_CASE("frozen point values") {
  const SigmaEvaluator& ev = default_sigma();
  // Center of the fundamental cell.
  CHECK(ev.sigma(Complex(0.5, 0.5)).magnitude() ==
        doctest::Approx(0.8364728863970867).epsilon(1e-12));
  // tau at the half point is real.
  const LogComplex t = ev.tau(Complex(0.5, 0.0));
  CHECK(t.to_complex().real() == doctest::Approx(0.9498987599758413).epsilon(1e-12));
  CHECK(std::abs(t.to_complex().imag()) < 1e-12);
  CHECK(ev.tau(Complex(0.0, 0.0)).to_complex().real() == doctest::Approx(1.0));
}

TEST_CASE("exact zeros via snapping") {
  const SigmaEvaluator& ev = default_sigma();
  CHECK(ev.sigma(Complex(0.0, 0.0)).is_zero());
  CHECK(ev.sigma(Complex(3.0, -2.0)).is_zero());
  CHECK(ev.sigma(Complex(1.0 + 1e-13, 0.0)).is_zero());
  CHECK_FALSE(ev.sigma(Complex(0.5, 0.0)).is_zero());
  CHECK(ev.tau(Complex(2.0, 1.0)).is_zero());
  CHECK_FALSE(ev.tau(Complex(0.0, 0.0)).is_zero());
}

TEST_CASE("sigma is odd") {
  const SigmaEvaluator& ev = default_sigma();
  const Complex z(0.37, -0.21);
  const LogComplex a = ev.sigma(z);
  const LogComplex b = ev.sigma(-z);
  CHECK(a.log_mag == doctest::Approx(b.log_mag).epsilon(1e-12));
  CHECK(std::abs(LogComplex::wrap_phase(a.phase - b.phase - M_PI)) < 1e-10);
}

TEST_CASE("Eisenstein closed forms against partial sums") {
  // Two independent routes: lemniscatic closed forms vs direct summation.
  auto partial = [](int k, int n) {
    Complex s(0.0, 0.0);
    for (int x = -n; x <= n; ++x)
      for (int y = -n; y <= n; ++y) {
        if (x == 0 && y == 0) continue;
        if (x * x + y * y > n * n) continue;
        s += std::pow(Complex(x, y), -k);
      }
    return s;
  };
  const Complex s4 = partial(4, 120);
  CHECK(std::abs(s4.imag()) < 1e-9);
  CHECK(SigmaEvaluator::eisenstein(4) == doctest::Approx(s4.real()).epsilon(1e-6));
  const Complex s8 = partial(8, 40);
  CHECK(SigmaEvaluator::eisenstein(8) == doctest::Approx(s8.real()).epsilon(1e-10));
  const Complex s12 = partial(12, 20);
  CHECK(SigmaEvaluator::eisenstein(12) == doctest::Approx(s12.real()).epsilon(1e-12));
}

TEST_CASE("plain truncated product alone is not reference quality") {
  // The tail correction carries the last four orders of magnitude; this
  // guards against silently dropping it.
  SigmaEvaluator::Params coarse;
  coarse.truncation_order = 60;
  const SigmaEvaluator ev(coarse);
  const Complex z(4.6, 1.2);
  const double with_tail = ev.sigma_product_reference(z).log_mag;
  const double fast = ev.sigma(z).log_mag;
  CHECK(std::abs(with_tail - fast) < 1e-8 * (1.0 + std::abs(fast)));
}

TEST_CASE("evaluator parameter validation") {
  SigmaEvaluator::Params p;
  p.truncation_order = 60;
  p.snap_tol = 1e-12;
  CHECK_NOTHROW(SigmaEvaluator{p});
}
