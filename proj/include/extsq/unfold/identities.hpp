#pragma once

#include <utility>

#include "extsq/unfold/shuffle.hpp"

namespace extsq::unfold {

// Sum of the entries just above the diagonal of the unit upper factor of B,
// read off an NHN decomposition.
template <class T>
T superdiag_sum(const UnfoldVars<T>& v);

// sum c_{i,j}/z_{i,j} + sum_{i <= n-2} z_{i,j}/c_{i+1,j} - sum_j z_{n-1,j}
template <class T>
T superdiag_closed_form(const UnfoldVars<T>& v);

// sum_{2i <= j <= 2n-2} x_{i,j} - sum_{i<n} x_{i,2n-1}
template <class T>
T superdiag_x_form(const UnfoldVars<T>& v);

// Both sides of sum_j s_j = sum_j z_{n-1,j}, the left side built from the
// shifted entries of b (= build_B(v)).
template <class T>
std::pair<T, T> altsum_check(const UnfoldVars<T>& v, const Matrix<T>& b);
template <class T>
std::pair<T, T> altsum_check(const UnfoldVars<T>& v) {
  return altsum_check(v, build_B(v));
}

// The lower factor b_- of B = (unit upper) * b_-, as a product of 4(n-1)
// sparse factors. Only x_{i,j} are read from v.
template <class T>
Matrix<T> lower_factor_recursive(const UnfoldVars<T>& v);

// Same factor through elimination: h * n_minus of the NHN decomposition.
template <class T>
Matrix<T> lower_factor_oracle(const Matrix<T>& b);

// True if every diagonal entry is +-1 times a monomial with coefficient 1.
bool diagonal_is_signed_monomial(const Matrix<RatFunc>& m);

}  // namespace extsq::unfold
