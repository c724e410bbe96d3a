#pragma once

#include <complex>
#include <vector>

#include "extsq/algebra/crat.hpp"
#include "extsq/common/parity.hpp"
#include "extsq/unfold/vars.hpp"

namespace extsq::unfold {

using algebra::CRat;
using Complex = std::complex<double>;

// Principal-series parameters: lambda in C^m and delta in (Z/2)^m.
struct EmbeddingParams {
  std::vector<CRat> lambda;
  ParityVec delta;

  std::size_t size() const { return lambda.size(); }
};

// e(x) = exp(2 pi i x)
Complex e_phase(double x);

// Value on the open cell: g = n h n_-, giving
// e(sum n_{i,i+1}) prod_j |h_j|^{(m+1)/2 - j - lambda_j} sgn(h_j)^{delta_j}.
// The Rat overload decomposes exactly and only then goes to double.
Complex whittaker_eval(const EmbeddingParams& p, const Matrix<Rat>& g);
Complex whittaker_eval(const EmbeddingParams& p, const Matrix<double>& g);

// The 2n x 2n matrix diag(B, 1) on which the unfolded Whittaker function is
// evaluated.
Matrix<Rat> shuffled_matrix(const UnfoldVars<Rat>& v);

// whittaker_eval(p, shuffled_matrix(v)).
Complex shuffled_whittaker_oracle(const UnfoldVars<Rat>& v, const EmbeddingParams& p);

// e(sum x_{i,j} - sum x_{i,2n-1}) * kappa2 *
//   prod |x_{i,j}|^{2n-j-lambda_i-lambda_{j+1-i}} sgn(x_{i,j})^{delta_i+delta_{j+1-i}}
Complex shuffled_whittaker_closed(const UnfoldVars<Rat>& v, const EmbeddingParams& p);

struct KappaSigns {
  int kappa1 = 1, kappa1_prime = 1, kappa2 = 1, kappa3 = 1, kappa = 1;
};

// delta has length 2n. Requires sum(delta) = eps + n*eta mod 2.
KappaSigns kappa_signs(int n_half, const ParityVec& delta, Parity eps, Parity eta);

struct GammaTableEntry {
  int i = 0, j = 0;  // 1-based pair, i < j, i + j <= 2n
  CRat shift;        // -lambda_i - lambda_j
  Parity parity;     // delta_i + delta_j + eta
  bool operator==(const GammaTableEntry&) const = default;
};

struct GammaTable {
  std::vector<GammaTableEntry> entries;  // sorted by (i, j)
  int sign = 1;                          // kappa
};

// Combines, coordinate by coordinate, the measure exponent s+j-2n-1 of
// x_{i,j} with its Whittaker exponent; each coordinate contributes one
// G-factor for the pair (i, j+1-i). eps is recovered from the parity rule.
GammaTable unfolded_gamma_table(const EmbeddingParams& p, Parity eta);

}  // namespace extsq::unfold
