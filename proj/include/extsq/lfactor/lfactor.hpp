#pragma once

#include <array>
#include <string>
#include <vector>

#include "extsq/lfactor/gamma_expr.hpp"
#include "extsq/lfactor/repr.hpp"

namespace extsq::lfactor {

// Archimedean exterior-square factor twisted by sgn^eta. Origins are
// "ds-self", "sign-ds", "sign-pair" or "ds-pair" after the block pair each
// factor comes from.
GammaExpr l_inf(const ReprData& r);

// prod over i < j, i + j <= m of G_{d_i+d_j+eta}(s - l_i - l_j)
GammaExpr script_g(const EmbeddingParams& e, Parity eta);
// prod over i < j, i + j > m + 1 of G_{d_i+d_j+eta}(s + l_i + l_j)
GammaExpr script_g_tilde(const EmbeddingParams& e, Parity eta);
// prod over all i < j of G_{d_i+d_j+eta}(s - l_i - l_j)
GammaExpr full_g_product(const EmbeddingParams& e, Parity eta);

// Closed-form root number as a power of i:
//   prod_{i<k<=r1} i^{-e_ik} * prod_j i^{k_j (2j - m) - e'_j}
// with e_ik = e_i + e_k + eta, e'_j = k_j + eta (mod 2) and the 2-blocks
// ordered by decreasing weight. For eta = 0 this is the untwisted formula.
int omega_power(const ReprData& r);

struct FeCheck {
  Complex lhs, rhs, omega;
  double rel_error = 0;
  // Twisted data: omega is solved as lhs / product and tested for being a
  // fourth root of unity that does not move with s.
  bool twisted = false;
  double unit_error = 0;   // |omega^4 - 1|
  double drift = 0;        // |omega(s) - omega(s')| at a second point
  Complex formula_omega;   // i^omega_power(r)
  bool passed = false;
};

// L(s, pi, Ext2 x chi) / L(1-s, dual, Ext2 x chi^-1) against
// omega * prod_{i<j} G. Throws PoleProximity within 1e-6 of a Gamma pole.
FeCheck fe_ratio_check(const ReprData& r, Complex s, double tol = 1e-8);

struct PoleEntry {
  CRat location;
  int order = 1;
  std::string family;  // "ds-self", "sign-pair", "ds-pair" ("sign-ds" never has poles here)
  bool operator==(const PoleEntry&) const = default;
};
using PoleList = std::vector<PoleEntry>;

// Poles of l_inf in Re s >= 1/2, from the Gamma argument lattices. One
// entry per (location, family), sorted.
PoleList pole_enumeration(const ReprData& r);
// The same list from the three explicit pole conditions.
PoleList pole_families(const ReprData& r);

// The six partial products of script_g, by which blocks i and j lie in:
// first 1-blocks, first x last 1-blocks, 1-block x 2-block, same 2-block,
// mirrored 2-blocks (l, r2+1-l), other 2-block pairs.
std::array<GammaExpr, 6> partial_products(const ReprData& r);
// Their simplified forms; the third and sixth are Gamma_C ratios.
std::array<GammaExpr, 6> partial_closed_forms(const ReprData& r);

struct HolomorphyReport {
  std::vector<std::string> failures;
  int poles_checked = 0;
  int zeros_checked = 0;
  bool ok() const { return failures.empty(); }
};

// (i) l_inf has no poles in Re s >= 1; (ii) each pole of l_inf in
// Re s >= 1/2 is matched by script_g with at least the same order and no
// partial product vanishes there; (iii) no partial product has a zero in
// 1/2 <= Re s < 1; (iv) the partial products multiply to script_g.
HolomorphyReport holomorphy_check(const ReprData& r);

}  // namespace extsq::lfactor
