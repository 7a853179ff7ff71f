#pragma once

#include "focklat/lattice.hpp"
#include "focklat/lattice_fn.hpp"

namespace focklat {

/// sigma_0(A^{-1} z) = prod_j sigma((A^{-1} z)_j); vanishes on A Z[i]^d.
LatticeFn tensor_sigma(const MatrixXcd& a);

/// tau_0(A^{-1} z) = prod_j tau((A^{-1} z)_j); equals 1 at the origin.
LatticeFn tensor_tau(const MatrixXcd& a);

/// Sigma-type function for Lambda = A Z[i]^2 built from the sublattice
/// Gamma = A B Z[i]^2 and a coset partition: the unshifted factor on the
/// axis coordinate annihilates the e0 cosets, Fock-shifted sigma factors
/// take care of e1 (first coordinate) and e2 (second coordinate).
LatticeFn build_sigma_lambda(const ComplexLattice& lat, const SublatticeSpec& spec,
                             const CosetPartition& part);

/// Interpolating variant: tau replaces the unshifted sigma factor and one
/// extra shifted factor per nonzero e0 tag restores vanishing on the cosets
/// the tau factor no longer kills.
LatticeFn build_tau_lambda(const ComplexLattice& lat, const SublatticeSpec& spec,
                           const CosetPartition& part);

struct FamilyResult {
  ComplexLattice lattice;
  SublatticeSpec spec;
  CosetPartition partition;
  LatticeFn fn;
};

/// Density-(>1) lattice [[1, 1/q], [0, gamma]] Z[i]^2 with
/// gamma^2 + 1/|q|^2 = 1 and its sigma-type function via the sublattice
/// B = [[1, -conj q], [0, |q|^2]] (AB diagonal). Requires |q|^2 >= 2.
FamilyResult family_fail(const GaussInt& q);

/// Rational-shear variant [[1, p/q], [0, gamma]] Z[i]^2, gamma^2 = 1 - 1/q^2,
/// via B = [[1, -p], [0, q]]. Requires q >= 2 and gcd(p, q) = 1.
FamilyResult family_rational(long p, long q);

struct ScaledFamilyResult {
  ComplexLattice lattice;
  LatticeFn fn;
};

/// diag(alpha, beta) family_fail(q) with the pulled-back function
/// F(D^{-1} z); alpha = beta = 1 returns family_fail's function unchanged.
/// Requires alpha, beta >= 1.
ScaledFamilyResult family_scaled(double alpha, double beta, const GaussInt& q);

/// F0(z) = prod_j sigma(gamma_j z_j) / z_j for an upper-triangular S with
/// positive diagonal (gamma_1, ..., gamma_d); F0(0) = prod gamma_j.
LatticeFn interpolant_known(const MatrixXcd& s_upper);

/// The 4-factor hexagonal model sigma-type function
///   sigma(z1) sigma(z2/sqrt3 - 1/2) sigma(z2/sqrt3 - i/2)
///   sigma(z2/sqrt3 - (1+i)/2) e^{2 pi (1-i) z2},
/// reproduced literally.
LatticeFn preset_hexagonal_n1();

/// The 4-factor hexagonal model candidate interpolant
///   tau(z1) sigma(z2/sqrt3 - 1/6) sigma(z2/sqrt3 - i/6)
///   sigma(z2/sqrt3 - (1+i)/6) e^{pi (1-i) z2 / sqrt3},
/// reproduced literally (verification is purely numerical).
LatticeFn preset_hexagonal_n2();

/// The hexagonal generator [[1, 1/2], [0, sqrt3/2]].
ComplexLattice hexagonal_lattice();

}  // namespace focklat
