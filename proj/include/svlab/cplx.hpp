#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "svlab/rational.hpp"

namespace svlab {

/// Exact complex rational. Smeared fields of trigonometric polynomials have
/// coefficients like +/- i, so the exact backend must be complex.
struct CRat {
  Rational re, im;

  CRat() : re(0), im(0) {}
  CRat(Rational r) : re(std::move(r)), im(0) {}
  CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i_times(const Rational& r) { return CRat(Rational(0), r); }

  bool is_zero() const { return re == 0 && im == 0; }

  CRat conj() const { return CRat(re, -im); }

  CRat operator-() const { return CRat(-re, -im); }
  CRat operator+(const CRat& o) const { return CRat(re + o.re, im + o.im); }
  CRat operator-(const CRat& o) const { return CRat(re - o.re, im - o.im); }
  CRat operator*(const CRat& o) const {
    return CRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  double abs() const { return std::abs(to_complex()); }

  std::string str() const {
    if (im == 0) return rat_str(re);
    return rat_str(re) + (im > 0 ? "+" : "") + rat_str(im) + "i";
  }
};

inline CRat operator*(const Rational& a, const CRat& b) { return CRat(a) * b; }

}  // namespace svlab
