#include <doctest.h>

#include <cmath>

#include "focklat/builders.hpp"

using namespace focklat;

TEST_CASE("tensor factors") {
  const LatticeFn s0 = tensor_sigma(MatrixXcd::Identity(2, 2));
  CHECK(s0.factors.size() == 2);
  VectorXcd z(2);
  z << Complex(1, 0), Complex(1, 1);
  CHECK(s0.eval(z).is_zero());
  z << Complex(0.5, 0), Complex(0.5, 0.5);
  CHECK_FALSE(s0.eval(z).is_zero());

  const LatticeFn t0 = tensor_tau(MatrixXcd::Identity(2, 2));
  CHECK(t0.eval(VectorXcd::Zero(2)).to_complex().real() == doctest::Approx(1.0));

  MatrixXcd sing = MatrixXcd::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(tensor_sigma(sing), std::domain_error);
}

TEST_CASE("family_fail factor counts") {
  CHECK(family_fail(GaussInt(2)).fn.factors.size() == 13);
  CHECK(family_fail(GaussInt(1, 1)).fn.factors.size() == 3);
  CHECK(family_fail(GaussInt(2, 1)).fn.factors.size() == 21);
  CHECK_THROWS_AS(family_fail(GaussInt(1)), std::domain_error);
  CHECK_THROWS_AS(family_fail(GaussInt(0, 1)), std::domain_error);
}

TEST_CASE("family_fail(2) lives on the hexagonal lattice and vanishes there") {
  const FamilyResult fam = family_fail(GaussInt(2));
  CHECK((fam.lattice.generator - hexagonal_lattice().generator).norm() < 1e-12);
  CHECK(fam.partition.e0.size() == 4);
  CHECK(fam.partition.e2.size() == 12);
  int zeros = 0;
  for (const VectorXcd& p : lattice_points_in_ball(fam.lattice, 3.0)) {
    CHECK(fam.fn.eval(p).is_zero());
    CHECK(fam.fn.vanishing_factor(p) >= 0);
    ++zeros;
  }
  CHECK(zeros >= 25);
  // Off-lattice point: nonzero.
  VectorXcd z(2);
  z << Complex(0.31, 0.17), Complex(-0.22, 0.41);
  CHECK_FALSE(fam.fn.eval(z).is_zero());
}

TEST_CASE("tau variant interpolates for q = 2") {
  const FamilyResult fam = family_fail(GaussInt(2));
  const LatticeFn tau_fn = build_tau_lambda(fam.lattice, fam.spec, fam.partition);
  // 13 base factors + a tau on the b2 line + one sigma per nonzero e0 tag.
  CHECK(tau_fn.factors.size() == 17);
  CHECK_FALSE(tau_fn.eval(VectorXcd::Zero(2)).is_zero());
  // Radius 4 covers the b2 line (|b2| = 2 sqrt3), which only the tau
  // factor on that line annihilates.
  for (const VectorXcd& p : lattice_points_in_ball(fam.lattice, 4.0)) {
    if (p.squaredNorm() < 1e-18) continue;
    CHECK(tau_fn.eval(p).is_zero());
  }
}

TEST_CASE("family_rational") {
  const FamilyResult r35 = family_rational(2, 5);
  CHECK(r35.partition.e0.size() == 1);
  CHECK(r35.fn.factors.size() == 25);
  CHECK(r35.lattice.generator(1, 1).real() ==
        doctest::Approx(std::sqrt(24.0) / 5.0));
  const FamilyResult r13 = family_rational(1, 3);
  CHECK(r13.fn.factors.size() == 9);
  for (const VectorXcd& p : lattice_points_in_ball(r13.lattice, 2.5))
    CHECK(r13.fn.eval(p).is_zero());
  CHECK_THROWS_AS(family_rational(2, 4), std::domain_error);  // gcd != 1
  CHECK_THROWS_AS(family_rational(1, 1), std::domain_error);
}

TEST_CASE("family_scaled") {
  SUBCASE("alpha = beta = 1 reproduces the base function exactly") {
    const FamilyResult base = family_fail(GaussInt(2));
    const ScaledFamilyResult same = family_scaled(1.0, 1.0, GaussInt(2));
    REQUIRE(same.fn.factors.size() == base.fn.factors.size());
    for (size_t k = 0; k < base.fn.factors.size(); ++k) {
      CHECK(same.fn.factors[k].row == base.fn.factors[k].row);
      CHECK(same.fn.factors[k].shift == base.fn.factors[k].shift);
    }
    CHECK((same.lattice.generator - base.lattice.generator).norm() == 0.0);
  }
  SUBCASE("pullback identity under the diagonal scaling") {
    const FamilyResult base = family_fail(GaussInt(2));
    const ScaledFamilyResult sc = family_scaled(2.0, 1.5, GaussInt(2));
    MatrixXcd d = MatrixXcd::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 1.5;
    CHECK((sc.lattice.generator - d * base.lattice.generator).norm() < 1e-14);
    VectorXcd z(2);
    z << Complex(0.4, -0.3), Complex(0.7, 0.2);
    const LogComplex a = sc.fn.eval(d * z);
    const LogComplex b = base.fn.eval(z);
    CHECK(a.log_mag == doctest::Approx(b.log_mag).epsilon(1e-12));
    CHECK(std::abs(LogComplex::wrap_phase(a.phase - b.phase)) < 1e-10);
    // The scaled function vanishes on the scaled lattice.
    for (const VectorXcd& p : lattice_points_in_ball(sc.lattice, 3.0))
      CHECK(sc.fn.eval(p).is_zero());
  }
  SUBCASE("scalings below 1 are rejected") {
    CHECK_THROWS_AS(family_scaled(0.5, 1.0, GaussInt(2)), std::domain_error);
    CHECK_THROWS_AS(family_scaled(1.0, 0.99, GaussInt(2)), std::domain_error);
  }
}

TEST_CASE("interpolant_known") {
  MatrixXcd s(1, 1);
  s(0, 0) = 0.8;
  const LatticeFn f = interpolant_known(s);
  CHECK(f.eval(VectorXcd::Zero(1)).to_complex().real() == doctest::Approx(0.8));
  VectorXcd z(1);
  z(0) = Complex(1.25, 0.0);  // 1 / 0.8
  CHECK(f.eval(z).is_zero());
  z(0) = Complex(0.6, 0.0);
  CHECK_FALSE(f.eval(z).is_zero());

  MatrixXcd bad(2, 2);
  bad << Complex(1, 0), Complex(0, 0), Complex(0.5, 0), Complex(1, 0);
  CHECK_THROWS_AS(interpolant_known(bad), std::domain_error);
  MatrixXcd neg(1, 1);
  neg(0, 0) = -0.5;
  CHECK_THROWS_AS(interpolant_known(neg), std::domain_error);
}

TEST_CASE("hexagonal presets") {
  const LatticeFn n1 = preset_hexagonal_n1();
  CHECK(n1.factors.size() == 4);
  CHECK(n1.pre_linear(1) == Complex(2.0 * M_PI, -2.0 * M_PI));
  // The preset vanishes on the hexagonal lattice.
  for (const VectorXcd& p : lattice_points_in_ball(hexagonal_lattice(), 3.0))
    CHECK(n1.eval(p).is_zero());

  const LatticeFn n2 = preset_hexagonal_n2();
  CHECK(n2.factors.size() == 4);
  CHECK(n2.factors.front().kind == FnFactor::Kind::kTau);
  CHECK_FALSE(n2.eval(VectorXcd::Zero(2)).is_zero());
}

TEST_CASE("inconsistent partitions are rejected") {
  const FamilyResult fam = family_fail(GaussInt(2));
  SUBCASE("tag moved out of e0") {
    CosetPartition broken = fam.partition;
    broken.e2.push_back(broken.e0.back());
    broken.e0.pop_back();
    CHECK_THROWS_AS(build_sigma_lambda(fam.lattice, fam.spec, broken),
                    std::domain_error);
  }
  SUBCASE("missing tag") {
    CosetPartition broken = fam.partition;
    broken.e2.pop_back();
    CHECK_THROWS_AS(build_sigma_lambda(fam.lattice, fam.spec, broken),
                    std::domain_error);
  }
}
