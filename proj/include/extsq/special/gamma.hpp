#pragma once

#include <complex>

#include "extsq/common/error.hpp"
#include "extsq/common/parity.hpp"

namespace extsq::special {

using Complex = std::complex<double>;

// Lanczos approximation with reflection for Re z < 1/2. Throws PoleError at
// nonpositive integers (exactly representable ones).
Complex gamma(Complex z);
Complex log_gamma(Complex z);

// pi^{-s/2} Gamma(s/2)
Complex gamma_r(Complex s);
// 2 (2 pi)^{-s} Gamma(s)
Complex gamma_c(Complex s);

// i^delta Gamma_R(s + delta) / Gamma_R(1 - s + delta). A pole of the
// denominator gives 0; a pole of the numerator throws PoleError.
Complex g_delta(Parity delta, Complex s);

// Both sides of G_{eta1}(s+z1) G_{eta2}(s+z2) = i^{z1-z2+1} Gamma_C(s+z1) / Gamma_C(1-s-z2).
// z1 - z2 must be an integer with z1 - z2 = eta1 - eta2 + 1 mod 2.
struct GCancel {
  Complex product, collapsed;
};
GCancel gcancel(Parity eta1, Parity eta2, Complex z1, Complex z2, Complex s);

// True if z is an exactly representable nonpositive integer; sets n.
bool at_nonpositive_integer(Complex z, long& n);

}  // namespace extsq::special
