#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "focklat/log_complex.hpp"
#include "focklat/sigma.hpp"

namespace focklat {

/// One scalar factor of a lattice function: a Fock-shifted sigma or tau
/// applied to the affine functional ell(z) = row . z + offset,
///     value = e^{pi conj(shift) ell(z) - pi |shift|^2 / 2} f(ell(z) - shift).
struct FnFactor {
  enum class Kind { kSigma, kTau };
  Kind kind = Kind::kSigma;
  Eigen::RowVectorXcd row;
  Complex offset{0.0, 0.0};
  Complex shift{0.0, 0.0};
};

/// Symbolic product of Fock-shifted sigma/tau factors with an exponential
/// prefactor e^{pre_linear . z + pre_const}, evaluated in LogComplex
/// arithmetic. Kept as a factor list (never a closed-form closure) so tests
/// can attribute zeros to individual factors and shift normalizers stay
/// exact.
struct LatticeFn {
  int dim = 1;
  std::vector<FnFactor> factors;
  Eigen::RowVectorXcd pre_linear;  // size dim (zero row if absent)
  Complex pre_const{0.0, 0.0};
  std::string meta;

  LogComplex eval(const Eigen::Ref<const Eigen::VectorXcd>& z,
                  const SigmaEvaluator& ev = default_sigma()) const;

  /// Index of the first factor evaluating to an exact zero at z, or -1.
  int vanishing_factor(const Eigen::Ref<const Eigen::VectorXcd>& z,
                       const SigmaEvaluator& ev = default_sigma()) const;
};

/// Factor value at the scalar argument arg = ell(z).
LogComplex eval_factor(const FnFactor& factor, Complex arg, const SigmaEvaluator& ev);

}  // namespace focklat
