#pragma once

#include <vector>

#include "extsq/special/gamma.hpp"

namespace extsq::special {

// psi = 1 on [0, inner_radius], 0 beyond outer_radius, smooth in between.
struct CutoffSpec {
  double inner_radius = 1.0;
  double outer_radius = 2.0;
  int parts_count = 2;
};

// 1 - psi(x) and its first `order` derivatives in x.
std::vector<double> cutoff_complement_jet(const CutoffSpec& c, double x, int order);

// The regularized integral of e(x) sgn(x)^delta |x|^{s-1} over the real line,
// computed independently of Gamma: the psi-piece by series plus adaptive
// Gauss-Kronrod, the (1-psi)-piece after parts_count integrations by parts.
// Requires 0 < Re s < parts_count. Throws ToleranceError if a quadrature
// misses tol.
Complex g_delta_integral(Parity delta, Complex s, const CutoffSpec& cutoff, double tol = 1e-10);

}  // namespace extsq::special
