#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "extsq/algebra/rational.hpp"

namespace extsq::algebra {

// Gaussian rational re + im*i. Used for exact shifts of Gamma factors.
struct CRat {
  Rat re, im;

  CRat() = default;
  CRat(long v) : re(v) {}
  CRat(const Rat& r) : re(r) {}
  CRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  // Accepts "a", "bi", "a+bi", "a-bi", "i", "-i"; each part any Rat::parse form.
  static CRat parse(std::string_view text);

  CRat operator-() const { return {-re, -im}; }
  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }

  CRat conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  std::string str() const;
};

// Lexicographic on (re, im); gives a deterministic order for sorting.
inline bool operator<(const CRat& a, const CRat& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

}  // namespace extsq::algebra
