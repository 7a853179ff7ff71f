#include "focklat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace focklat {

namespace {

double op_norm(const MatrixXcd& m) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double inv_op_norm(const MatrixXcd& m) { return op_norm(m.inverse()); }

GaussInt det_recursive(const std::vector<GaussInt>& e, int d) {
  if (d == 1) return e[0];
  if (d == 2) return e[0] * e[3] - e[1] * e[2];
  // d == 3, Laplace along the first row
  auto minor_det = [&](int skip_col) {
    std::vector<GaussInt> m;
    for (int r = 1; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (c != skip_col) m.push_back(e[r * 3 + c]);
    return m[0] * m[3] - m[1] * m[2];
  };
  return e[0] * minor_det(0) - e[1] * minor_det(1) + e[2] * minor_det(2);
}

}  // namespace

ComplexLattice::ComplexLattice(MatrixXcd a) : generator(std::move(a)) {
  if (generator.rows() != generator.cols() || generator.rows() < 1)
    throw std::domain_error("ComplexLattice: generator must be square, d >= 1");
  const double absdet = std::abs(generator.determinant());
  if (!(absdet > 1e-12))
    throw std::domain_error("ComplexLattice: generator is singular (|det| <= 1e-12)");
}

double density(const ComplexLattice& lat) {
  const double absdet = std::abs(lat.generator.determinant());
  return 1.0 / (absdet * absdet);
}

ComplexLattice adjoint(const ComplexLattice& lat) {
  return ComplexLattice(lat.generator.adjoint().inverse());
}

namespace {

struct Candidate {
  Eigen::VectorXi coeffs;  // interleaved (re1, im1, re2, im2, ...)
  double norm2;
};

// Gaussian-integer coefficient vector -> complex vector.
VectorXcd to_point(const MatrixXcd& a, const Eigen::VectorXi& coeffs) {
  const int d = static_cast<int>(a.cols());
  VectorXcd k(d);
  for (int j = 0; j < d; ++j)
    k(j) = Complex(coeffs(2 * j), coeffs(2 * j + 1));
  return a * k;
}

bool lex_less(const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
  for (int i = 0; i < x.size(); ++i)
    if (x(i) != y(i)) return x(i) < y(i);
  return false;
}

}  // namespace

ReducedForm reduce(const ComplexLattice& lat) {
  const int d = lat.dim();
  if (d > 3)
    throw std::domain_error("reduce: exhaustive enumeration supports d <= 3 only");
  const MatrixXcd& a = lat.generator;

  double max_col = 0.0;
  for (int j = 0; j < d; ++j) max_col = std::max(max_col, a.col(j).norm());
  const double inv_norm = inv_op_norm(a);
  const int bound = std::max(1, static_cast<int>(std::ceil(inv_norm * max_col + 1e-9)));

  const double budget = std::pow(2.0 * bound + 1.0, 2 * d);
  if (budget > 5e7) {
    std::ostringstream msg;
    msg << "reduce: enumeration budget exceeded (coefficient bound " << bound
        << ", " << budget << " candidates > 5e7)";
    throw std::runtime_error(msg.str());
  }

  // Enumerate every candidate in the coefficient box and sort by length,
  // ties broken lexicographically for determinism.
  std::vector<Candidate> candidates;
  Eigen::VectorXi c = Eigen::VectorXi::Constant(2 * d, -bound);
  for (;;) {
    if (!c.isZero()) {
      const double n2 = to_point(a, c).squaredNorm();
      candidates.push_back({c, n2});
    }
    int i = 0;
    for (; i < 2 * d; ++i) {
      if (c(i) < bound) {
        ++c(i);
        break;
      }
      c(i) = -bound;
    }
    if (i == 2 * d) break;
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (std::abs(x.norm2 - y.norm2) > 1e-12 * (1.0 + x.norm2)) return x.norm2 < y.norm2;
    return lex_less(x.coeffs, y.coeffs);
  });

  // Greedy successive minima: shortest vector not in the C-span of the
  // previously chosen ones.
  MatrixXcd chosen(d, 0);
  std::vector<GaussInt> coeff_entries(d * d, GaussInt(0));
  int picked = 0;
  for (const Candidate& cand : candidates) {
    if (picked == d) break;
    const VectorXcd v = to_point(a, cand.coeffs);
    MatrixXcd trial(d, picked + 1);
    trial.leftCols(picked) = chosen;
    trial.col(picked) = v;
    Eigen::ColPivHouseholderQR<MatrixXcd> qr(trial);
    qr.setThreshold(1e-9);
    if (qr.rank() != picked + 1) continue;
    chosen.conservativeResize(d, picked + 1);
    chosen.col(picked) = v;
    for (int j = 0; j < d; ++j)
      coeff_entries[j * d + picked] = GaussInt(cand.coeffs(2 * j), cand.coeffs(2 * j + 1));
    ++picked;
  }
  if (picked != d) throw std::runtime_error("reduce: failed to find d independent minima");

  // The chosen coefficient matrix must be a unit of GL(d, Z[i]) so that the
  // columns form a basis, not merely a full-rank sublattice.
  const GaussInt det_k = det_recursive(coeff_entries, d);
  if (det_k.norm() != 1)
    throw std::runtime_error(
        "reduce: successive minima do not form a Z[i]-basis (|det| != 1); "
        "lattice outside the supported reduction class");

  // QR with diagonal phases absorbed into U.
  Eigen::HouseholderQR<MatrixXcd> qr(chosen);
  MatrixXcd u = qr.householderQ() * MatrixXcd::Identity(d, d);
  MatrixXcd s = u.adjoint() * chosen;
  for (int j = 0; j < d; ++j) {
    const Complex diag = s(j, j);
    const Complex phase = diag / std::abs(diag);
    s.row(j) *= std::conj(phase);
    u.col(j) *= phase;
  }
  // Size-reduce the off-diagonal entries; no-op for a genuinely
  // Minkowski-reduced basis, kept for tie cases.
  for (int k = 1; k < d; ++k) {
    for (int j = k - 1; j >= 0; --j) {
      const Complex ratio = s(j, k) / s(j, j).real();
      const Complex t(std::round(ratio.real()), std::round(ratio.imag()));
      if (t != Complex(0.0, 0.0)) s.col(k) -= t * s.col(j);
    }
  }
  for (int j = 0; j < d; ++j) s(j, j) = Complex(s(j, j).real(), 0.0);
  for (int k = 0; k < d; ++k)
    for (int j = k + 1; j < d; ++j) s(j, k) = Complex(0.0, 0.0);
  return {std::move(u), std::move(s)};
}

SublatticeSpec SublatticeSpec::from_matrix(int dim, std::vector<GaussInt> entries) {
  if (dim < 1 || dim > 3 || static_cast<int>(entries.size()) != dim * dim)
    throw std::domain_error("SublatticeSpec: need a square entry list, d <= 3");
  SublatticeSpec spec;
  spec.dim = dim;
  spec.entries = std::move(entries);
  spec.delta_det = det_recursive(spec.entries, dim);
  if (spec.delta_det.is_zero())
    throw std::domain_error("SublatticeSpec: B is singular (det = 0)");
  GaussInt g = spec.entries[0];
  for (int c = 1; c < dim; ++c) {
    const GaussInt& e = spec.entries[c];
    if (g.is_zero() && e.is_zero()) continue;
    if (g.is_zero())
      g = canonical_associate(e);
    else if (e.is_zero())
      g = canonical_associate(g);
    else
      g = gcd_gaussian(g, e);
  }
  spec.gcd_first_row = canonical_associate(g);
  return spec;
}

MatrixXcd SublatticeSpec::to_complex() const {
  MatrixXcd b(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) b(r, c) = at(r, c).to_complex();
  return b;
}

namespace {

// Z[i] points inside the half-open square g Q, Q = [0,1) + i [0,1):
// w in g Q  <=>  0 <= Re(w conj g) < N(g) and 0 <= Im(w conj g) < N(g).
std::vector<GaussInt> points_in_scaled_square(const GaussInt& g) {
  const BigInt n = g.norm();
  const int bound =
      static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) * 1.5)) + 1;
  std::vector<GaussInt> out;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      const GaussInt w(x, y);
      const GaussInt u = w * g.conj();
      if (u.re >= 0 && u.re < n && u.im >= 0 && u.im < n) out.push_back(w);
    }
  }
  return out;
}

}  // namespace

std::vector<CosetRep> coset_reps(const SublatticeSpec& spec) {
  if (spec.dim != 2)
    throw std::domain_error("coset_reps: pair form defined for d = 2 only");
  const GaussInt& gamma = spec.gcd_first_row;
  const GaussInt second_scale = exact_div(spec.delta_det, gamma);
  const std::vector<GaussInt> first = points_in_scaled_square(gamma);
  const std::vector<GaussInt> second = points_in_scaled_square(second_scale);
  std::vector<CosetRep> reps;
  reps.reserve(first.size() * second.size());
  for (const GaussInt& d1 : first)
    for (const GaussInt& d2 : second) reps.emplace_back(d1, d2);
  if (BigInt(reps.size()) != spec.index())
    throw std::logic_error("coset_reps: cardinality != |det B|^2");
  return reps;
}

CosetPartition partition_cosets(const SublatticeSpec& spec, CosetAxis axis,
                                const E1Rule& e1_rule) {
  if (spec.dim != 2) throw std::domain_error("partition_cosets: d = 2 only");
  if (spec.gcd_first_row.norm() != 1)
    throw std::domain_error(
        "partition_cosets: first-row gcd " + to_string(spec.gcd_first_row) +
        " is not a unit; the partition is specified only for |gcd(a, c)| = 1");
  // With |gcd| = 1 every representative is (0, delta); e0 collects the delta
  // whose coset the unshifted factor already annihilates, i.e. those with
  // c delta / Delta (resp. a delta / Delta) in Z[i].
  const GaussInt mult = axis == CosetAxis::kFirst ? spec.at(0, 1) : spec.at(0, 0);
  CosetPartition part;
  part.axis = axis;
  for (const CosetRep& rep : coset_reps(spec)) {
    if (!rep.first.is_zero())
      throw std::logic_error("partition_cosets: nonzero first tag despite unit gcd");
    const GaussInt& delta = rep.second;
    if (divides(spec.delta_det, mult * delta))
      part.e0.push_back(delta);
    else if (e1_rule && e1_rule(delta))
      part.e1.push_back(delta);
    else
      part.e2.push_back(delta);
  }
  return part;
}

std::vector<VectorXcd> lattice_points_in_ball(const ComplexLattice& lat, double radius) {
  if (!(radius > 0)) throw std::domain_error("lattice_points_in_ball: radius <= 0");
  const int d = lat.dim();
  const int bound =
      std::max(1, static_cast<int>(std::ceil(inv_op_norm(lat.generator) * radius + 1e-9)));
  const double r2 = radius * radius * (1.0 + 1e-12) + 1e-12;

  std::vector<VectorXcd> points;
  Eigen::VectorXi c = Eigen::VectorXi::Constant(2 * d, -bound);
  // Lexicographic traversal in (re1, im1, re2, im2, ...), most significant
  // coordinate first, for a deterministic point order.
  std::function<void(int)> recur = [&](int idx) {
    if (idx == 2 * d) {
      const VectorXcd v = to_point(lat.generator, c);
      if (v.squaredNorm() <= r2) points.push_back(v);
      return;
    }
    for (int t = -bound; t <= bound; ++t) {
      c(idx) = t;
      recur(idx + 1);
    }
  };
  recur(0);
  return points;
}

}  // namespace focklat
