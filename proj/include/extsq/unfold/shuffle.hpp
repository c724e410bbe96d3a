#pragma once

#include <vector>

#include "extsq/unfold/vars.hpp"

namespace extsq::unfold {

// The card-shuffle permutation of 1..2n: k -> 2k-1 (mod 2n-1) for k < 2n,
// fixing 2n. Column k of the matrix has its 1 in row image[k-1].
struct ShuffleSigma {
  int n_half = 0;
  std::vector<int> image;
  Matrix<Rat> matrix;

  // Sign of the permutation, from its cycle structure.
  int sign() const;
};

ShuffleSigma sigma(int n_half);

// +1 for n = 0,1 mod 4 and -1 for n = 2,3 mod 4.
int sigma_sign_rule(int n_half);

// The (2n-1)x(2n-1) upper block A, filled in closed form.
template <class T>
Matrix<T> build_block_A(const UnfoldVars<T>& v);

// The full 2n x 2n product sigma * [[C, Z], [0, C]] * diag(f1, f2), formed by
// literal matrix multiplication. Its upper block should be build_block_A.
template <class T>
Matrix<T> assembled_product(const UnfoldVars<T>& v);

// Replaces the off-diagonal c and z entries of A by the shifted values fixed
// by the determinantal relations. One pass, bottom row first, and right to
// left within a row, resolves every unknown from an equation affine in it.
template <class T>
Matrix<T> build_B(const UnfoldVars<T>& v);

// det of the contiguous block whose top-right corner is the position of
// y(a, b) and whose bottom row is the last row; 1 if the block is empty.
template <class T>
T corner_block_det(const Matrix<T>& b, int n, int a, int row);

// Checks det B_{y(a,b)} = (-1)^{size-1} det B_{y(a+1,b+1)} y(a,b) for every
// coordinate. Returns the coordinates where it fails.
template <class T>
std::vector<std::pair<int, int>> determinantal_failures(const Matrix<T>& b, const UnfoldVars<T>& v);

// The shifted entries read back out of B.
template <class T>
T shifted_c(const Matrix<T>& b, int n, int r, int i) {
  return b(static_cast<std::size_t>(2 * r - 1), static_cast<std::size_t>(2 * n - i - 1));
}
template <class T>
T shifted_z(const Matrix<T>& b, int n, int r, int i) {
  return b(static_cast<std::size_t>(2 * r), static_cast<std::size_t>(2 * n - i - 1));
}

// Replaces the last column of a so that, for every k, the block of rows and
// columns k..m has determinant (-1)^{m-k} a_{k,m} times the minor of rows
// k+1..m, columns k..m-1.
template <class T>
Matrix<T> slice_last_column(const Matrix<T>& a);

}  // namespace extsq::unfold
