#include "focklat/lattice_fn.hpp"

namespace focklat {

LogComplex eval_factor(const FnFactor& factor, Complex arg, const SigmaEvaluator& ev) {
  LogComplex v = factor.kind == FnFactor::Kind::kSigma ? ev.sigma(arg - factor.shift)
                                                       : ev.tau(arg - factor.shift);
  if (v.is_zero() || factor.shift == Complex(0.0, 0.0)) return v;
  const Complex expo =
      M_PI * std::conj(factor.shift) * arg - M_PI * std::norm(factor.shift) / 2.0;
  v.log_mag += expo.real();
  v.phase = LogComplex::wrap_phase(v.phase + expo.imag());
  return v;
}

LogComplex LatticeFn::eval(const Eigen::Ref<const Eigen::VectorXcd>& z,
                           const SigmaEvaluator& ev) const {
  LogComplex out = LogComplex::one();
  if (pre_linear.size() > 0) {
    const Complex expo = (pre_linear * z)(0, 0) + pre_const;
    out = LogComplex::from_exponent(expo);
  } else if (pre_const != Complex(0.0, 0.0)) {
    out = LogComplex::from_exponent(pre_const);
  }
  for (const FnFactor& f : factors) {
    const Complex arg = (f.row * z)(0, 0) + f.offset;
    out *= eval_factor(f, arg, ev);
    if (out.is_zero()) return out;  // absorbing
  }
  return out;
}

int LatticeFn::vanishing_factor(const Eigen::Ref<const Eigen::VectorXcd>& z,
                                const SigmaEvaluator& ev) const {
  for (size_t i = 0; i < factors.size(); ++i) {
    const FnFactor& f = factors[i];
    const Complex arg = (f.row * z)(0, 0) + f.offset;
    if (eval_factor(f, arg, ev).is_zero()) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace focklat
