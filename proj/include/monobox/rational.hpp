// Exact rational scalars (GMP) and exact Gaussian rationals.
#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace monobox {

using Rational = mpq_class;

/// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "P/Q" or an integer "P". Decimals and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Canonical "P/Q" (or "P" when the denominator is 1).
std::string to_string(const Rational& r);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

/// Largest integer <= r.
mpz_class floor_rational(const Rational& r);

/// r - floor(r), in [0, 1).
Rational frac_rational(const Rational& r);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

}  // namespace monobox
