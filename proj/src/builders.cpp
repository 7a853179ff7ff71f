#include "focklat/builders.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace focklat {

namespace {

constexpr double kPi = M_PI;

// Exact Gaussian rational num/den as a complex double.
Complex ratio(const GaussInt& num, const GaussInt& den) {
  const GaussInt u = num * den.conj();
  const double n = static_cast<double>(den.norm());
  return {static_cast<double>(u.re) / n, static_cast<double>(u.im) / n};
}

void check_partition_consistency(const SublatticeSpec& spec, const CosetPartition& part) {
  const GaussInt mult =
      part.axis == CosetAxis::kFirst ? spec.at(0, 1) : spec.at(0, 0);
  const size_t total = part.e0.size() + part.e1.size() + part.e2.size();
  if (BigInt(total) != spec.index())
    throw std::domain_error("partition inconsistent with sublattice: tag count " +
                            std::to_string(total) + " != |det B|^2");
  for (const GaussInt& d : part.e0)
    if (!divides(spec.delta_det, mult * d))
      throw std::domain_error("partition inconsistent: e0 tag " + to_string(d) +
                              " fails the divisibility test");
  for (const std::vector<GaussInt>* rest : {&part.e1, &part.e2})
    for (const GaussInt& d : *rest)
      if (divides(spec.delta_det, mult * d))
        throw std::domain_error("partition inconsistent: tag " + to_string(d) +
                                " belongs to e0");
}

LatticeFn tensor_impl(const MatrixXcd& a, FnFactor::Kind kind, const char* name) {
  const int d = static_cast<int>(a.cols());
  if (a.rows() != d || std::abs(a.determinant()) <= 1e-12)
    throw std::domain_error(std::string(name) + ": matrix is singular");
  const MatrixXcd inv = a.inverse();
  LatticeFn fn;
  fn.dim = d;
  fn.pre_linear = Eigen::RowVectorXcd::Zero(d);
  for (int j = 0; j < d; ++j) {
    FnFactor f;
    f.kind = kind;
    f.row = inv.row(j);
    fn.factors.push_back(std::move(f));
  }
  std::ostringstream meta;
  meta << name << " d=" << d;
  fn.meta = meta.str();
  return fn;
}

}  // namespace

LatticeFn tensor_sigma(const MatrixXcd& a) {
  return tensor_impl(a, FnFactor::Kind::kSigma, "tensor_sigma");
}

LatticeFn tensor_tau(const MatrixXcd& a) {
  return tensor_impl(a, FnFactor::Kind::kTau, "tensor_tau");
}

namespace {

// Common scaffolding of the two sublattice builders.
struct SublatticeContext {
  MatrixXcd ab;
  MatrixXcd ab_inv;
  GaussInt a, c;  // first row of B
};

SublatticeContext sublattice_context(const ComplexLattice& lat, const SublatticeSpec& spec,
                                     const CosetPartition& part) {
  if (lat.dim() != 2 || spec.dim != 2)
    throw std::domain_error("sublattice construction: d = 2 only");
  if (spec.gcd_first_row.norm() != 1)
    throw std::domain_error("sublattice construction: |gcd(a, c)| must be 1, got " +
                            to_string(spec.gcd_first_row));
  check_partition_consistency(spec, part);
  SublatticeContext ctx;
  ctx.ab = lat.generator * spec.to_complex();
  ctx.ab_inv = ctx.ab.inverse();
  ctx.a = spec.at(0, 0);
  ctx.c = spec.at(0, 1);
  return ctx;
}

}  // namespace

LatticeFn build_sigma_lambda(const ComplexLattice& lat, const SublatticeSpec& spec,
                             const CosetPartition& part) {
  const SublatticeContext ctx = sublattice_context(lat, spec, part);
  const int axis_row = part.axis == CosetAxis::kFirst ? 0 : 1;

  LatticeFn fn;
  fn.dim = 2;
  fn.pre_linear = Eigen::RowVectorXcd::Zero(2);

  FnFactor head;
  head.kind = FnFactor::Kind::kSigma;
  head.row = ctx.ab_inv.row(axis_row);
  fn.factors.push_back(std::move(head));

  const GaussInt delta = spec.delta_det;
  for (const GaussInt& eta : part.e1) {
    FnFactor f;
    f.kind = FnFactor::Kind::kSigma;
    f.row = ctx.ab_inv.row(0);
    f.shift = ratio(-(ctx.c * eta), delta);
    fn.factors.push_back(std::move(f));
  }
  for (const GaussInt& eta : part.e2) {
    FnFactor f;
    f.kind = FnFactor::Kind::kSigma;
    f.row = ctx.ab_inv.row(1);
    f.shift = ratio(ctx.a * eta, delta);
    fn.factors.push_back(std::move(f));
  }
  std::ostringstream meta;
  meta << "sigma_lambda axis=" << axis_row + 1 << " |e0|=" << part.e0.size()
       << " |e1|=" << part.e1.size() << " |e2|=" << part.e2.size();
  fn.meta = meta.str();
  return fn;
}

LatticeFn build_tau_lambda(const ComplexLattice& lat, const SublatticeSpec& spec,
                           const CosetPartition& part) {
  const SublatticeContext ctx = sublattice_context(lat, spec, part);
  const bool first_axis = part.axis == CosetAxis::kFirst;
  const int axis_row = first_axis ? 0 : 1;

  LatticeFn fn = build_sigma_lambda(lat, spec, part);
  fn.factors.front().kind = FnFactor::Kind::kTau;

  // The tau factor kills every sublattice translate except the b2 line
  // (resp. b1 for the second axis) through the zero-tag coset, and leaves
  // the points l b + r b3 of the nonzero-tag cosets alive. A tau along the
  // surviving basis direction restores the zeros on that line while staying
  // 1 at the origin; one shifted sigma per nonzero tag handles the rest.
  const VectorXcd b_axis = ctx.ab.col(first_axis ? 1 : 0);
  const Eigen::RowVectorXcd row_b = b_axis.adjoint() / b_axis.squaredNorm();
  const GaussInt mult = first_axis ? ctx.c : ctx.a;
  {
    FnFactor f;
    f.kind = FnFactor::Kind::kTau;
    f.row = row_b;
    fn.factors.push_back(std::move(f));
  }
  bool have_zeta = false;
  Complex zeta{0.0, 0.0};
  for (const GaussInt& d : part.e0) {
    if (d.is_zero()) continue;
    if (!have_zeta) {
      // Delta / c (resp. Delta / a) must be an exact Gaussian integer to
      // express b3; exact_div reports the failed divisibility otherwise.
      const GaussInt delta_over = exact_div(spec.delta_det, mult);
      VectorXcd offset_vec(2);
      offset_vec << Complex(0, 0), delta_over.to_complex();
      VectorXcd b3 = first_axis ? VectorXcd(b_axis + lat.generator * offset_vec)
                                : VectorXcd(lat.generator * offset_vec - ctx.ab.col(1));
      zeta = b_axis.dot(b3) / b_axis.squaredNorm();  // Hermitian <b3, b2>/||b2||^2
      have_zeta = true;
    }
    const GaussInt r = exact_div(mult * d, spec.delta_det);
    FnFactor f;
    f.kind = FnFactor::Kind::kSigma;
    f.row = row_b;
    f.shift = r.to_complex() * zeta;
    fn.factors.push_back(std::move(f));
  }
  std::ostringstream meta;
  meta << "tau_lambda axis=" << axis_row + 1 << " |e0|=" << part.e0.size()
       << " extra=" << (part.e0.empty() ? 1 : part.e0.size());
  fn.meta = meta.str();
  return fn;
}

FamilyResult family_fail(const GaussInt& q) {
  if (q.norm() < 2)
    throw std::domain_error("family_fail: |q|^2 >= 2 required (q must not be a unit), got q = " +
                            to_string(q));
  const double n = static_cast<double>(q.norm());
  const double gamma = std::sqrt(1.0 - 1.0 / n);
  const Complex inv_q = q.conj().to_complex() / n;

  MatrixXcd a(2, 2);
  a << Complex(1, 0), inv_q, Complex(0, 0), Complex(gamma, 0);
  ComplexLattice lat(a);

  SublatticeSpec spec = SublatticeSpec::from_matrix2(
      GaussInt(1), -q.conj(), GaussInt(0), GaussInt(q.norm(), 0));
  CosetPartition part = partition_cosets(spec, CosetAxis::kFirst);

  const MatrixXcd ab = a * spec.to_complex();
  if (std::abs(ab(0, 1)) > 1e-12)
    throw std::logic_error("family_fail: AB is not diagonal");

  LatticeFn fn = build_sigma_lambda(lat, spec, part);
  fn.meta = "family_fail q=" + to_string(q);
  return {std::move(lat), std::move(spec), std::move(part), std::move(fn)};
}

FamilyResult family_rational(long p, long q) {
  if (q < 2) throw std::domain_error("family_rational: q >= 2 required");
  if (p < 1) throw std::domain_error("family_rational: p >= 1 required");
  if (std::gcd(p, q) != 1)
    throw std::domain_error("family_rational: gcd(p, q) = " +
                            std::to_string(std::gcd(p, q)) +
                            " != 1 (coset lemma special case needs coprimality)");
  const double gamma = std::sqrt(1.0 - 1.0 / (double(q) * q));
  MatrixXcd a(2, 2);
  a << Complex(1, 0), Complex(double(p) / q, 0), Complex(0, 0), Complex(gamma, 0);
  ComplexLattice lat(a);

  SublatticeSpec spec =
      SublatticeSpec::from_matrix2(GaussInt(1), GaussInt(-p), GaussInt(0), GaussInt(q));
  CosetPartition part = partition_cosets(spec, CosetAxis::kFirst);
  LatticeFn fn = build_sigma_lambda(lat, spec, part);
  fn.meta = "family_rational p=" + std::to_string(p) + " q=" + std::to_string(q);
  return {std::move(lat), std::move(spec), std::move(part), std::move(fn)};
}

ScaledFamilyResult family_scaled(double alpha, double beta, const GaussInt& q) {
  if (!(alpha >= 1.0) || !(beta >= 1.0))
    throw std::domain_error("family_scaled: alpha, beta >= 1 required (growth bound)");
  FamilyResult base = family_fail(q);
  if (alpha == 1.0 && beta == 1.0)
    return {std::move(base.lattice), std::move(base.fn)};

  MatrixXcd d = MatrixXcd::Zero(2, 2);
  d(0, 0) = alpha;
  d(1, 1) = beta;
  const MatrixXcd d_inv = d.inverse();

  ComplexLattice scaled(d * base.lattice.generator);
  LatticeFn fn = std::move(base.fn);
  for (FnFactor& f : fn.factors) f.row = f.row * d_inv;
  if (fn.pre_linear.size() > 0) fn.pre_linear = fn.pre_linear * d_inv;
  fn.meta += " scaled alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
  return {std::move(scaled), std::move(fn)};
}

LatticeFn interpolant_known(const MatrixXcd& s_upper) {
  const int d = static_cast<int>(s_upper.cols());
  if (s_upper.rows() != d) throw std::domain_error("interpolant_known: square matrix required");
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < r; ++c)
      if (std::abs(s_upper(r, c)) > 1e-12)
        throw std::domain_error("interpolant_known: matrix not upper triangular");
  LatticeFn fn;
  fn.dim = d;
  fn.pre_linear = Eigen::RowVectorXcd::Zero(d);
  double log_prod = 0.0;
  for (int j = 0; j < d; ++j) {
    const Complex g = s_upper(j, j);
    if (!(g.real() > 0.0) || std::abs(g.imag()) > 1e-12)
      throw std::domain_error("interpolant_known: diagonal must be real positive");
    // sigma(g z_j) / z_j = g tau(g z_j)
    FnFactor f;
    f.kind = FnFactor::Kind::kTau;
    f.row = Eigen::RowVectorXcd::Zero(d);
    f.row(j) = g;
    fn.factors.push_back(std::move(f));
    log_prod += std::log(g.real());
  }
  fn.pre_const = Complex(log_prod, 0.0);
  fn.meta = "interpolant_known d=" + std::to_string(d);
  return fn;
}

ComplexLattice hexagonal_lattice() {
  MatrixXcd a(2, 2);
  a << Complex(1, 0), Complex(0.5, 0), Complex(0, 0), Complex(std::sqrt(3.0) / 2.0, 0);
  return ComplexLattice(a);
}

namespace {

LatticeFn hexagonal_preset(FnFactor::Kind head, double offset_scale, Complex pre_linear_z2) {
  const double s3 = std::sqrt(3.0);
  LatticeFn fn;
  fn.dim = 2;
  FnFactor f1;
  f1.kind = head;
  f1.row = Eigen::RowVectorXcd::Zero(2);
  f1.row(0) = 1.0;
  fn.factors.push_back(std::move(f1));
  const Complex offsets[] = {{offset_scale, 0.0}, {0.0, offset_scale},
                             {offset_scale, offset_scale}};
  for (const Complex off : offsets) {
    FnFactor f;
    f.kind = FnFactor::Kind::kSigma;
    f.row = Eigen::RowVectorXcd::Zero(2);
    f.row(1) = 1.0 / s3;
    f.offset = -off;
    fn.factors.push_back(std::move(f));
  }
  fn.pre_linear = Eigen::RowVectorXcd::Zero(2);
  fn.pre_linear(1) = pre_linear_z2;
  return fn;
}

}  // namespace

LatticeFn preset_hexagonal_n1() {
  LatticeFn fn = hexagonal_preset(FnFactor::Kind::kSigma, 0.5,
                                  2.0 * kPi * Complex(1.0, -1.0));
  fn.meta = "preset hexagonal n1";
  return fn;
}

LatticeFn preset_hexagonal_n2() {
  LatticeFn fn = hexagonal_preset(FnFactor::Kind::kTau, 1.0 / 6.0,
                                  kPi * Complex(1.0, -1.0) / std::sqrt(3.0));
  fn.meta = "preset hexagonal n2";
  return fn;
}

}  // namespace focklat
