#include <doctest.h>

#include <random>
#include <vector>

#include "focklat/gauss_int.hpp"

using namespace focklat;

namespace {

// Brute-force divisibility: search all q with norm(q) <= norm(b)/norm(a).
bool divides_brute(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) return true;
  const BigInt bound2 = b.norm() / a.norm();
  const long bound = static_cast<long>(boost::multiprecision::sqrt(bound2)) + 1;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (a * GaussInt(x, y) == b) return true;
  return false;
}

// Brute-force gcd: the common divisor of maximal norm (unique up to units).
GaussInt gcd_brute(const GaussInt& a, const GaussInt& b) {
  const GaussInt& ref = a.is_zero() ? b : a;
  GaussInt best(0, 0);
  const long bound = static_cast<long>(boost::multiprecision::sqrt(ref.norm())) + 1;
  for (long x = -bound; x <= bound; ++x) {
    for (long y = -bound; y <= bound; ++y) {
      const GaussInt g(x, y);
      if (g.is_zero() || g.norm() > ref.norm()) continue;
      if (!divides_brute(g, a) || !divides_brute(g, b)) continue;
      if (g.norm() > best.norm()) best = g;
    }
  }
  return canonical_associate(best);
}

GaussInt random_gauss(std::mt19937& rng, long max_abs) {
  std::uniform_int_distribution<long> dist(-max_abs, max_abs);
  return {dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("ring operations and norm multiplicativity") {
  const GaussInt a(3, -2), b(-1, 4);
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK(a * b == b * a);
  CHECK(a + b - b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).re == a.norm());
  CHECK((a * a.conj()).im == 0);
  CHECK(a.times_i() == GaussInt(0, 1) * a);
}

TEST_CASE("canonical associate lands in the half-open first quadrant") {
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) {
      const GaussInt g(x, y);
      if (g.is_zero()) {
        CHECK(canonical_associate(g) == g);
        continue;
      }
      const GaussInt c = canonical_associate(g);
      CHECK(c.re > 0);
      CHECK(c.im >= 0);
      CHECK(c.norm() == g.norm());
      CHECK(canonical_associate(c) == c);  // idempotent
    }
  }
}

TEST_CASE("divides and exact_div agree with brute-force enumeration") {
  std::mt19937 rng(20240811);
  int checked = 0;
  while (checked < 500) {
    const GaussInt a = random_gauss(rng, 10);
    const GaussInt b = random_gauss(rng, 10);
    if (a.is_zero() || a.norm() > 100 || b.norm() > 100) continue;
    ++checked;
    const bool expect = divides_brute(a, b);
    CHECK(divides(a, b) == expect);
    if (expect)
      CHECK(exact_div(b, a) * a == b);
    else
      CHECK_THROWS_AS(exact_div(b, a), std::domain_error);
  }
}

TEST_CASE("gcd matches brute-force maximal common divisor (500 random pairs)") {
  std::mt19937 rng(20240812);
  int checked = 0;
  while (checked < 500) {
    const GaussInt a = random_gauss(rng, 10);
    const GaussInt b = random_gauss(rng, 10);
    if ((a.is_zero() && b.is_zero()) || a.norm() > 100 || b.norm() > 100) continue;
    ++checked;
    const GaussInt g = gcd_gaussian(a, b);
    CHECK(g == gcd_brute(a, b));
    if (!a.is_zero()) CHECK(divides(g, a));
    if (!b.is_zero()) CHECK(divides(g, b));
  }
}

TEST_CASE("gcd of zero pair is rejected") {
  CHECK_THROWS_AS(gcd_gaussian(GaussInt(0, 0), GaussInt(0, 0)), std::domain_error);
  CHECK_THROWS_AS(divides(GaussInt(0, 0), GaussInt(1, 0)), std::domain_error);
}

TEST_CASE("Euclidean step contracts the norm") {
  std::mt19937 rng(20240813);
  for (int k = 0; k < 200; ++k) {
    const GaussInt a = random_gauss(rng, 50);
    const GaussInt b = random_gauss(rng, 50);
    if (b.is_zero()) continue;
    const GaussInt r = a - round_quotient(a, b) * b;
    CHECK(2 * r.norm() <= b.norm());
  }
}

TEST_CASE("text form round-trips") {
  const std::vector<GaussInt> samples = {
      {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0},  {0, 3},
      {1, 1}, {1, -1}, {-3, 2}, {5, -7}, {-2, -2}, {12, 1}, {1, 12}};
  for (const GaussInt& g : samples) {
    CAPTURE(to_string(g));
    CHECK(parse_gauss_int(to_string(g)) == g);
  }
  CHECK(parse_gauss_int("2+0i") == GaussInt(2, 0));
  CHECK(parse_gauss_int("1+i") == GaussInt(1, 1));
  CHECK(parse_gauss_int("-i") == GaussInt(0, -1));
  CHECK_THROWS_AS(parse_gauss_int(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_int("1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_int("i2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_int("2 + 3i"), std::invalid_argument);
}

TEST_CASE("floor and round division of big integers") {
  using detail::floor_div;
  using detail::round_div;
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(round_div(7, 2) == 4);   // ties round up
  CHECK(round_div(-7, 2) == -3);
  CHECK(round_div(9, 4) == 2);
  CHECK(round_div(11, 4) == 3);
}
