#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "supmech/error.hpp"

namespace supmech {

using Rational = boost::multiprecision::mpq_rational;

// Element of Q(i): exact complex rational.  Always kept in canonical reduced
// form (mpq_rational canonicalizes on every operation).
struct GaussRat {
  Rational re{0};
  Rational im{0};

  GaussRat() = default;
  GaussRat(long n) : re(n) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat{Rational(0), Rational(1)}; }
  static GaussRat frac(long num, long den) {
    require(den != 0, "zero denominator");
    return GaussRat{Rational(num) / den};
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  GaussRat operator-() const { return {-re, -im}; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rational n = o.re * o.re + o.im * o.im;
    require(n != 0, "division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  double to_double_re() const { return re.convert_to<double>(); }
  double to_double_im() const { return im.convert_to<double>(); }

  // Canonical text form, reparseable by the expression grammar:
  // "0", "3/2", "i", "-i", "2*i", "1+i", "1-2/3*i", ...
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += re.str();
    if (im != 0) {
      if (im > 0 && re != 0) out += "+";
      if (im == 1)
        out += "i";
      else if (im == -1)
        out += "-i";
      else
        out += im.str() + "*i";
    }
    return out;
  }
};

}  // namespace supmech
