#include "focklat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace focklat {

namespace {

constexpr double kPi = M_PI;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_step(double grid_step) {
  if (!(grid_step > 0.0) || grid_step > 0.25)
    throw std::domain_error("grid_step must lie in (0, 0.25], got " +
                            std::to_string(grid_step));
}

}  // namespace

int thread_cap() {
  if (const char* env = std::getenv("FOCKLAT_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<int>(std::min<long>(n, 256));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

VanishingReport check_vanishing(const LatticeFn& f, const ComplexLattice& lat,
                                double radius, const SigmaEvaluator& ev) {
  if (!(radius > 0)) throw std::domain_error("check_vanishing: radius <= 0");
  VanishingReport rep;
  rep.lattice_radius = radius;
  rep.worst_point = VectorXcd::Zero(lat.dim());
  for (const VectorXcd& p : lattice_points_in_ball(lat, radius)) {
    ++rep.checked_points;
    const double res = normalized_magnitude(f.eval(p, ev), p.squaredNorm());
    if (res > rep.max_normalized_residual) {
      rep.max_normalized_residual = res;
      rep.worst_point = p;
    }
  }
  return rep;
}

InterpolationReport check_interpolating(const LatticeFn& f, const ComplexLattice& lat,
                                        double radius, const SigmaEvaluator& ev) {
  if (!(radius > 0)) throw std::domain_error("check_interpolating: radius <= 0");
  InterpolationReport rep;
  rep.lattice_radius = radius;
  rep.worst_point = VectorXcd::Zero(lat.dim());
  rep.origin_value = f.eval(VectorXcd::Zero(lat.dim()), ev);
  rep.origin_nonzero = !rep.origin_value.is_zero();
  if (!rep.origin_nonzero)
    rep.diagnostic = "origin value is exactly zero: the function vanishes at 0 "
                     "and cannot interpolate";
  for (const VectorXcd& p : lattice_points_in_ball(lat, radius)) {
    if (p.squaredNorm() < 1e-18) continue;
    ++rep.checked_points;
    const double res = normalized_magnitude(f.eval(p, ev), p.squaredNorm());
    if (res > rep.max_offorigin_residual) {
      rep.max_offorigin_residual = res;
      rep.worst_point = p;
    }
  }
  return rep;
}

double GrowthProfile::max_value() const {
  double m = 0.0;
  for (double v : sup_normalized) m = std::max(m, v);
  return m;
}

double GrowthProfile::max_up_to(double r) const {
  double m = 0.0;
  for (size_t k = 0; k < radii.size(); ++k)
    if (radii[k] <= r * (1.0 + 1e-12)) m = std::max(m, sup_normalized[k]);
  return m;
}

double GrowthProfile::value_at(double r) const {
  for (size_t k = 0; k < radii.size(); ++k)
    if (r <= radii[k] * (1.0 + 1e-12)) return sup_normalized[k];
  throw std::domain_error("GrowthProfile::value_at: radius beyond profile");
}

namespace {

// One grid cell of a single complex coordinate: the point w = step (m + i n),
// its squared modulus, and the summed normalized log magnitude of every
// factor living on that coordinate.
struct CoordCell {
  double abs2;
  double log_val;  // -inf encodes an exact zero
};

struct ShellAccumulator {
  double step;
  double r2_max;
  std::vector<double> sup_log;

  explicit ShellAccumulator(double grid_step, double max_radius, size_t n_shells)
      : step(grid_step),
        r2_max(max_radius * max_radius * (1.0 + 1e-12)),
        sup_log(n_shells, kNegInf) {}

  void feed(double abs2, double log_val) {
    if (abs2 > r2_max) return;
    const double r = std::sqrt(abs2);
    size_t idx = static_cast<size_t>(std::max(0.0, std::ceil(r / step - 1e-9) - 1.0));
    if (idx >= sup_log.size()) idx = sup_log.size() - 1;
    if (log_val > sup_log[idx]) sup_log[idx] = log_val;
  }

  void merge(const ShellAccumulator& other) {
    for (size_t k = 0; k < sup_log.size(); ++k)
      sup_log[k] = std::max(sup_log[k], other.sup_log[k]);
  }
};

int single_support(const Eigen::RowVectorXcd& row) {
  int j = -1;
  for (int c = 0; c < row.size(); ++c) {
    if (row(c) == Complex(0.0, 0.0)) continue;
    if (j >= 0) return -2;  // more than one coordinate
    j = c;
  }
  return j;  // -1: constant row
}

// Per-coordinate tables for a function whose every factor depends on at most
// one complex coordinate. Combining the full product grid then costs one
// addition per (cell tuple) instead of a sigma evaluation per factor.
struct SeparableTables {
  std::vector<std::vector<CoordCell>> coords;  // size d
  double const_log = 0.0;
  bool const_zero = false;
};

bool build_separable(const LatticeFn& f, double max_radius, double step,
                     const SigmaEvaluator& ev, SeparableTables& out) {
  const int d = f.dim;
  std::vector<std::vector<const FnFactor*>> per_coord(d);
  std::vector<const FnFactor*> constants;
  for (const FnFactor& fac : f.factors) {
    const int j = single_support(fac.row);
    if (j == -2) return false;
    if (j == -1)
      constants.push_back(&fac);
    else
      per_coord[j].push_back(&fac);
  }

  out.const_log = f.pre_const.real();
  for (const FnFactor* fac : constants) {
    const LogComplex v = eval_factor(*fac, fac->offset, ev);
    if (v.is_zero()) {
      out.const_zero = true;
      return true;
    }
    out.const_log += v.log_mag;
  }

  const int m_max = static_cast<int>(std::floor(max_radius / step + 1e-9));
  out.coords.resize(d);
  for (int j = 0; j < d; ++j) {
    const Complex pre = f.pre_linear.size() > 0 ? f.pre_linear(j) : Complex(0, 0);
    auto& cells = out.coords[j];
    cells.reserve(static_cast<size_t>(2 * m_max + 1) * (2 * m_max + 1));
    for (int mr = -m_max; mr <= m_max; ++mr) {
      for (int mi = -m_max; mi <= m_max; ++mi) {
        const Complex w(step * mr, step * mi);
        const double abs2 = std::norm(w);
        if (abs2 > max_radius * max_radius * (1.0 + 1e-12)) continue;
        double lv = (pre * w).real() - kPi * abs2 / 2.0;
        for (const FnFactor* fac : per_coord[j]) {
          const LogComplex v = eval_factor(*fac, fac->row(j) * w + fac->offset, ev);
          if (v.is_zero()) {
            lv = kNegInf;
            break;
          }
          lv += v.log_mag;
        }
        cells.push_back({abs2, lv});
      }
    }
  }
  return true;
}

// Recursive combination of per-coordinate tables; the outermost level is
// sliced for the thread pool.
void combine_separable(const SeparableTables& tab, size_t coord, double abs2,
                       double log_val, ShellAccumulator& acc) {
  const auto& cells = tab.coords[coord];
  if (coord + 1 == tab.coords.size()) {
    for (const CoordCell& c : cells) {
      const double a2 = abs2 + c.abs2;
      if (a2 > acc.r2_max) continue;
      acc.feed(a2, log_val + c.log_val);
    }
    return;
  }
  for (const CoordCell& c : cells) {
    if (abs2 + c.abs2 > acc.r2_max) continue;
    combine_separable(tab, coord + 1, abs2 + c.abs2, log_val + c.log_val, acc);
  }
}

// Direct scan for non-separable functions: odometer over the 2d-dimensional
// index box, outermost index sliced for threads.
void scan_direct(const LatticeFn& f, const SigmaEvaluator& ev, double step, int m_max,
                 int outer_lo, int outer_hi, ShellAccumulator& acc) {
  const int d = f.dim;
  VectorXcd z = VectorXcd::Zero(d);
  std::vector<int> idx(2 * d, -m_max);
  for (int outer = outer_lo; outer < outer_hi; ++outer) {
    idx.assign(2 * d, -m_max);
    idx[0] = outer;
    for (;;) {
      double abs2 = 0.0;
      for (int j = 0; j < d; ++j) {
        z(j) = Complex(step * idx[2 * j], step * idx[2 * j + 1]);
        abs2 += std::norm(z(j));
      }
      if (abs2 <= acc.r2_max) {
        const LogComplex v = f.eval(z, ev);
        if (!v.is_zero()) acc.feed(abs2, v.log_mag - kPi * abs2 / 2.0);
      }
      int j = 1;
      for (; j < 2 * d; ++j) {
        if (idx[j] < m_max) {
          ++idx[j];
          break;
        }
        idx[j] = -m_max;
      }
      if (j == 2 * d) break;
    }
  }
}

template <typename SliceFn>
void run_sliced(int lo, int hi, size_t n_shells, double step, double max_radius,
                ShellAccumulator& acc, SliceFn&& slice) {
  const int n_threads = std::min(thread_cap(), std::max(1, hi - lo));
  if (n_threads == 1) {
    slice(lo, hi, acc);
    return;
  }
  std::vector<ShellAccumulator> locals(n_threads,
                                       ShellAccumulator(step, max_radius, n_shells));
  std::vector<std::thread> pool;
  const int span = hi - lo;
  for (int t = 0; t < n_threads; ++t) {
    const int a = lo + span * t / n_threads;
    const int b = lo + span * (t + 1) / n_threads;
    pool.emplace_back([&, t, a, b] { slice(a, b, locals[t]); });
  }
  for (auto& th : pool) th.join();
  for (const auto& l : locals) acc.merge(l);
}

}  // namespace

GrowthProfile estimate_growth(const LatticeFn& f, double max_radius, double grid_step,
                              const SigmaEvaluator& ev) {
  require_step(grid_step);
  if (!(max_radius > 0)) throw std::domain_error("estimate_growth: max_radius <= 0");

  const size_t n_shells =
      static_cast<size_t>(std::ceil(max_radius / grid_step - 1e-9));
  ShellAccumulator acc(grid_step, max_radius, n_shells);

  SeparableTables tab;
  if (build_separable(f, max_radius, grid_step, ev, tab)) {
    if (!tab.const_zero) {
      const auto& outer = tab.coords[0];
      auto slice = [&](int a, int b, ShellAccumulator& local) {
        for (int i = a; i < b; ++i) {
          const CoordCell& c = outer[i];
          if (c.abs2 > local.r2_max) continue;
          if (tab.coords.size() == 1)
            local.feed(c.abs2, tab.const_log + c.log_val);
          else
            combine_separable(tab, 1, c.abs2, tab.const_log + c.log_val, local);
        }
      };
      run_sliced(0, static_cast<int>(outer.size()), n_shells, grid_step, max_radius,
                 acc, slice);
    }
  } else {
    const int m_max = static_cast<int>(std::floor(max_radius / grid_step + 1e-9));
    auto slice = [&](int a, int b, ShellAccumulator& local) {
      scan_direct(f, ev, grid_step, m_max, a, b, local);
    };
    run_sliced(-m_max, m_max + 1, n_shells, grid_step, max_radius, acc, slice);
  }

  GrowthProfile prof;
  prof.grid_step = grid_step;
  for (size_t k = 0; k < n_shells; ++k) {
    prof.radii.push_back(grid_step * static_cast<double>(k + 1));
    prof.sup_normalized.push_back(
        acc.sup_log[k] == kNegInf ? 0.0 : std::exp(acc.sup_log[k]));
  }
  return prof;
}

double f2_quadrature(const LatticeFn& f, double radius, double grid_step,
                     const SigmaEvaluator& ev) {
  require_step(grid_step);
  if (!(radius > 0)) throw std::domain_error("f2_quadrature: radius <= 0");
  const int d = f.dim;
  const int m_max = static_cast<int>(std::ceil(radius / grid_step));
  const double r2 = radius * radius;

  double sum = 0.0;
  VectorXcd z = VectorXcd::Zero(d);
  std::vector<int> idx(2 * d, -m_max);
  for (;;) {
    double abs2 = 0.0;
    for (int j = 0; j < d; ++j) {
      z(j) = Complex(grid_step * (idx[2 * j] + 0.5), grid_step * (idx[2 * j + 1] + 0.5));
      abs2 += std::norm(z(j));
    }
    if (abs2 <= r2) {
      const LogComplex v = f.eval(z, ev);
      if (!v.is_zero()) sum += std::exp(2.0 * v.log_mag - kPi * abs2);
    }
    int j = 0;
    for (; j < 2 * d; ++j) {
      if (idx[j] < m_max - 1) {
        ++idx[j];
        break;
      }
      idx[j] = -m_max;
    }
    if (j == 2 * d) break;
  }
  return sum * std::pow(grid_step, 2 * d);
}

Complex lagrange_reconstruct(const SampleFn& samples, const LatticeFn& g,
                             const ComplexLattice& lat,
                             const Eigen::Ref<const VectorXcd>& z, double trunc_radius,
                             LagrangeWeight weight, LagrangeTrace* trace,
                             const SigmaEvaluator& ev) {
  const double z_norm = z.norm();
  if (!(trunc_radius >= z_norm + 2.0))
    throw std::domain_error("lagrange_reconstruct: trunc_radius must be >= |z| + 2");

  std::vector<VectorXcd> points = lattice_points_in_ball(lat, trunc_radius);
  std::stable_sort(points.begin(), points.end(),
                   [](const VectorXcd& a, const VectorXcd& b) {
                     return a.squaredNorm() < b.squaredNorm() - 1e-12;
                   });

  const double absdet = std::abs(lat.generator.determinant());
  const double vol = absdet * absdet;
  const double weight_scale = weight == LagrangeWeight::kFull ? 1.0 : 0.5;

  std::vector<double> marks;
  for (int k = 1; k < trunc_radius - 1e-9; ++k) marks.push_back(k);
  marks.push_back(trunc_radius);
  size_t next_mark = 0;

  Complex sum(0.0, 0.0);
  auto flush_marks = [&](double r) {
    while (trace && next_mark < marks.size() && marks[next_mark] < r - 1e-9) {
      trace->radii.push_back(marks[next_mark]);
      trace->partial_sums.push_back(vol * sum);
      ++next_mark;
    }
  };

  for (const VectorXcd& lam : points) {
    const double abs2 = lam.squaredNorm();
    flush_marks(std::sqrt(abs2));
    const Complex f_val = samples(lam);
    if (f_val == Complex(0.0, 0.0)) continue;
    LogComplex gv = g.eval(z - lam, ev);
    if (gv.is_zero()) continue;
    const Complex expo = kPi * lam.dot(z) - kPi * weight_scale * abs2;
    gv.log_mag += expo.real();
    gv.phase = LogComplex::wrap_phase(gv.phase + expo.imag());
    sum += f_val * gv.to_complex();
  }
  flush_marks(trunc_radius + 1.0);
  if (trace && next_mark < marks.size()) {
    for (; next_mark < marks.size(); ++next_mark) {
      trace->radii.push_back(marks[next_mark]);
      trace->partial_sums.push_back(vol * sum);
    }
  }
  return vol * sum;
}

namespace {

// Midpoint quadrature of <phi, pi_lambda phi> along one real coordinate:
//   I(xi, eta) = int e^{-pi x^2} e^{-2 pi i eta x} e^{-pi (x - xi)^2} dx.
Complex window_overlap_1d(double xi, double eta, double h) {
  const double half_width = 8.0 + std::abs(xi);
  const long n = static_cast<long>(std::ceil(2.0 * half_width / h));
  Complex sum(0.0, 0.0);
  for (long k = 0; k < n; ++k) {
    const double x = -half_width + h * (k + 0.5);
    const double mag = std::exp(-kPi * x * x - kPi * (x - xi) * (x - xi));
    const double ph = -2.0 * kPi * eta * x;
    sum += mag * Complex(std::cos(ph), std::sin(ph));
  }
  return sum * h;
}

}  // namespace

BargmannBridge bargmann_coefficient(const Eigen::Ref<const VectorXcd>& lambda) {
  const int d = static_cast<int>(lambda.size());
  if (d < 1) throw std::domain_error("bargmann_coefficient: empty point");

  Complex coarse(1.0, 0.0), fine(1.0, 0.0);
  for (int j = 0; j < d; ++j) {
    const double xi = lambda(j).real();
    const double eta = lambda(j).imag();
    coarse *= window_overlap_1d(xi, eta, 1.0 / 32.0);
    fine *= window_overlap_1d(xi, eta, 1.0 / 64.0);
  }
  if (std::abs(coarse - fine) > 1e-9)
    throw std::runtime_error("bargmann_coefficient: quadrature did not converge "
                             "under step halving");

  BargmannBridge out;
  out.quadrature = std::abs(fine);
  out.closed_form =
      std::pow(2.0, -0.5 * d) * std::exp(-kPi * lambda.squaredNorm() / 2.0);
  return out;
}

}  // namespace focklat
