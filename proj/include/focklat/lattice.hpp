#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "focklat/gauss_int.hpp"

namespace focklat {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Full-rank complex lattice Lambda = A Z[i]^d.
struct ComplexLattice {
  MatrixXcd generator;  // invertible d x d

  int dim() const { return static_cast<int>(generator.cols()); }

  explicit ComplexLattice(MatrixXcd a);
};

/// Points per unit real volume in R^{2d} ~ C^d: |det A|^{-2}.
double density(const ComplexLattice& lat);

/// Adjoint lattice (A^*)^{-1} Z[i]^d.
ComplexLattice adjoint(const ComplexLattice& lat);

/// Unitary-times-triangular normal form of a Minkowski-reduced basis.
struct ReducedForm {
  MatrixXcd unitary;  // U, U*U = I
  MatrixXcd upper;    // S upper triangular, real positive diagonal
};

/// Minkowski reduction (exhaustive short-vector enumeration, d <= 3)
/// followed by QR with the diagonal phases absorbed into U. The result
/// satisfies |Re s_jk|, |Im s_jk| <= s_jj / 2 for k > j and nondecreasing
/// column norms. Throws std::runtime_error when the enumeration budget is
/// exceeded, naming the bound.
ReducedForm reduce(const ComplexLattice& lat);

/// Sublattice Gamma = A B Z[i]^d given by an integer matrix B over Z[i].
/// Stored row-major; for d = 2 the first row is (a, c) in the coset lemma's
/// notation.
struct SublatticeSpec {
  int dim = 2;
  std::vector<GaussInt> entries;  // dim * dim, row-major
  GaussInt delta_det;             // det B, nonzero
  GaussInt gcd_first_row;         // gcd of the first-row entries

  const GaussInt& at(int row, int col) const { return entries[row * dim + col]; }

  static SublatticeSpec from_matrix(int dim, std::vector<GaussInt> entries);
  static SublatticeSpec from_matrix2(const GaussInt& a, const GaussInt& c,
                                     const GaussInt& b, const GaussInt& d) {
    return from_matrix(2, {a, c, b, d});
  }

  MatrixXcd to_complex() const;

  /// Number of cosets |det B|^2.
  BigInt index() const { return delta_det.norm(); }
};

using CosetRep = std::pair<GaussInt, GaussInt>;

/// Coset representatives of Z[i]^2 / B Z[i]^2 in the pair form
/// D = {(d1, d2) : d1 in gamma Q, d2 in (Delta/gamma) Q} with Q the
/// half-open unit square; cardinality |det B|^2. Deterministic
/// (lexicographic) order.
std::vector<CosetRep> coset_reps(const SublatticeSpec& spec);

enum class CosetAxis { kFirst, kSecond };

/// Predicate deciding which non-annihilated tags go to E1 (rest to E2).
/// Null selector sends everything to E2.
using E1Rule = std::function<bool(const GaussInt&)>;

/// Disjoint split of the coset tags delta (second components, first
/// component 0 under |gcd(a, c)| = 1).
struct CosetPartition {
  CosetAxis axis = CosetAxis::kFirst;
  std::vector<GaussInt> e0;  // tags annihilated by the unshifted factor
  std::vector<GaussInt> e1;
  std::vector<GaussInt> e2;
};

/// Partitions the representatives: delta lands in e0 iff c*delta/Delta (axis
/// kFirst) resp. a*delta/Delta (axis kSecond) is a Gaussian integer, the
/// exact condition under which the unshifted sigma factor kills the whole
/// coset. This is the divisibility "Delta/c | delta" read without assuming
/// Delta/c itself integral. Requires |gcd(a, c)| = 1 and d = 2.
CosetPartition partition_cosets(const SublatticeSpec& spec, CosetAxis axis,
                                const E1Rule& e1_rule = nullptr);

/// All lattice points A k with |A k| <= radius, ordered lexicographically in
/// the integer coordinates of k.
std::vector<VectorXcd> lattice_points_in_ball(const ComplexLattice& lat, double radius);

}  // namespace focklat
