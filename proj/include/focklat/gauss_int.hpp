#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace focklat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the ring Z[i] of Gaussian integers.
///
/// Arbitrary-precision components: coset enumeration works with |det B|^2
/// entries and intermediate products, which must never wrap.
struct GaussInt {
  BigInt re{0};
  BigInt im{0};

  GaussInt() = default;
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussInt(long r) : re(r), im(0) {}
  GaussInt(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussInt operator+(const GaussInt& x, const GaussInt& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussInt operator-(const GaussInt& x, const GaussInt& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussInt operator-(const GaussInt& x) { return {-x.re, -x.im}; }
  friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussInt& x, const GaussInt& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const GaussInt& x, const GaussInt& y) { return !(x == y); }

  GaussInt conj() const { return {re, -im}; }

  /// re^2 + im^2; zero iff the element is zero, multiplicative.
  BigInt norm() const { return re * re + im * im; }

  /// i * this (rotation by the unit i).
  GaussInt times_i() const { return {-im, re}; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

namespace detail {
/// Floor division of arbitrary-precision integers (cpp_int '/' truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}
/// Nearest integer to a/b, b > 0. Ties round up; any nearest value keeps
/// the Euclidean remainder bound norm(r) <= norm(b)/2.
inline BigInt round_div(const BigInt& a, const BigInt& b) {
  return floor_div(2 * a + b, 2 * b);
}
}  // namespace detail

/// u * a for the unique unit u in {1, i, -1, -i} placing the result in the
/// half-open first quadrant {re > 0, im >= 0} (or 0). Idempotent.
inline GaussInt canonical_associate(GaussInt a) {
  if (a.is_zero()) return a;
  for (int k = 0; k < 4; ++k) {
    if (a.re > 0 && a.im >= 0) return a;
    a = a.times_i();
  }
  throw std::logic_error("canonical_associate: no quadrant representative");
}

/// Exact quotient b/a over Z[i]; throws if a = 0 or a does not divide b.
inline GaussInt exact_div(const GaussInt& b, const GaussInt& a) {
  if (a.is_zero()) throw std::domain_error("exact_div: division by zero in Z[i]");
  const GaussInt num = b * a.conj();
  const BigInt n = a.norm();
  if (num.re % n != 0 || num.im % n != 0)
    throw std::domain_error("exact_div: quotient not a Gaussian integer");
  return {num.re / n, num.im / n};
}

/// True iff b/a lies in Z[i]. Exact integer test, no floating point.
inline bool divides(const GaussInt& a, const GaussInt& b) {
  if (a.is_zero()) throw std::domain_error("divides: divisor is zero");
  const GaussInt num = b * a.conj();
  const BigInt n = a.norm();
  return num.re % n == 0 && num.im % n == 0;
}

/// Rounded quotient: the q minimizing norm(a - q b) over nearest rounding.
/// Guarantees norm(a - q b) <= norm(b)/2, the Euclidean step of the gcd.
inline GaussInt round_quotient(const GaussInt& a, const GaussInt& b) {
  const GaussInt num = a * b.conj();
  const BigInt n = b.norm();
  return {detail::round_div(num.re, n), detail::round_div(num.im, n)};
}

/// Canonical-associate gcd via the Euclidean algorithm with nearest-integer
/// rounding. Deterministic despite gcds over Z[i] being defined only up to
/// units. Throws for (0, 0).
inline GaussInt gcd_gaussian(GaussInt a, GaussInt b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd_gaussian: gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    const GaussInt q = round_quotient(a, b);
    const GaussInt r = a - q * b;
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

/// Text form "a+bi" / "a-bi" (pure values print as "a", "bi").
inline std::string to_string(const GaussInt& g) {
  if (g.im == 0) return g.re.str();
  std::string s;
  if (g.re != 0) {
    s = g.re.str();
    if (g.im > 0) s += "+";
  }
  if (g.im == -1)
    s += "-";
  else if (g.im != 1)
    s += g.im.str();
  s += "i";
  return s;
}

/// Parses "a+bi" / "a-bi" / "a" / "bi" / "i" / "-i". Whitespace-free form.
GaussInt parse_gauss_int(const std::string& text);

}  // namespace focklat
