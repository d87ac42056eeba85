#pragma once

// Exact scalars: GMP rationals and Gaussian rationals a + b*i.

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace symobs {

using Rational = mpq_class;

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(Rational r) : re(std::move(r)), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational n = o.norm2();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
};

inline GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
inline GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
inline GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
inline GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
inline GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
inline bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

}  // namespace symobs
