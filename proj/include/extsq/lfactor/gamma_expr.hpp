#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "extsq/algebra/crat.hpp"
#include "extsq/common/parity.hpp"

namespace extsq::lfactor {

using algebra::CRat;
using algebra::Rat;
using Complex = std::complex<double>;

// R: Gamma_R, C: Gamma_C, G: G_parity.
enum class GammaKind { R, C, G };

// One factor evaluated at s_sign * s + shift.
struct GammaFactor {
  GammaKind kind = GammaKind::R;
  int s_sign = 1;
  CRat shift;
  Parity parity;       // G only
  std::string origin;  // bookkeeping, ignored by comparisons

  CRat argument(const CRat& s) const;
  Complex argument(Complex s) const;
  Complex eval(Complex s) const;
  // +1 at a pole, -1 at a zero (G only), 0 otherwise.
  int order_at(const CRat& s) const;
  // Points s with lo <= Re s < hi where the factor has a pole or zero.
  // hi may only be omitted when the lattice runs toward -infinity.
  void singular_points(const Rat& lo, const std::optional<Rat>& hi, std::vector<CRat>& out) const;
  // Distance from s to the nearest pole of any Gamma function inside.
  double pole_distance(Complex s) const;
  std::string str() const;
};

bool same_factor(const GammaFactor& a, const GammaFactor& b);
bool factor_less(const GammaFactor& a, const GammaFactor& b);

// i^i_power * prod(num) / prod(den), compared as multisets.
struct GammaExpr {
  int i_power = 0;
  std::vector<GammaFactor> num, den;

  GammaExpr& operator*=(const GammaExpr& o);
  friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
  void canonicalize();
  bool empty() const { return num.empty() && den.empty(); }

  Complex constant() const;
  Complex eval(Complex s) const;
  // Pole order minus zero order at s, counted exactly on the lattices.
  int order_at(const CRat& s) const;
  // Sorted, deduplicated points with lo <= Re s < hi where some factor is singular.
  std::vector<CRat> singular_points(const Rat& lo, const std::optional<Rat>& hi) const;
  double pole_distance(Complex s) const;
  // Rewrites every G_d(w) as i^d Gamma_R(w+d) / Gamma_R(1-w+d).
  GammaExpr expanded() const;
  std::string str() const;

  friend bool operator==(const GammaExpr& a, const GammaExpr& b);
};

GammaFactor gamma_r_factor(const CRat& shift, std::string origin = {}, int s_sign = 1);
GammaFactor gamma_c_factor(const CRat& shift, std::string origin = {}, int s_sign = 1);
GammaFactor g_factor(Parity p, const CRat& shift, std::string origin = {}, int s_sign = 1);

}  // namespace extsq::lfactor
