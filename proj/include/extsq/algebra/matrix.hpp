#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "extsq/algebra/poly.hpp"
#include "extsq/algebra/rational.hpp"
#include "extsq/algebra/ratfunc.hpp"
#include "extsq/common/error.hpp"

namespace extsq::algebra {

using Complex = std::complex<double>;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

// Dense row-major matrix over a ring. Indices are 0-based.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (auto& row : rows) {
      if (row.size() != c_) throw DomainError("ragged matrix literal");
      for (auto& x : row) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<T>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw DomainError("matrix product shape mismatch");
    Matrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          if (!is_zero(o(k, j))) m(i, j) += a * o(k, j);
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  template <class F>
  auto map(F f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

  bool is_upper() const { return shape_ok([](std::size_t i, std::size_t j) { return i > j; }); }
  bool is_lower() const { return shape_ok([](std::size_t i, std::size_t j) { return i < j; }); }
  bool is_diagonal() const { return is_upper() && is_lower(); }
  bool unit_diagonal() const {
    for (std::size_t i = 0; i < std::min(r_, c_); ++i)
      if (!((*this)(i, i) == T(1))) return false;
    return true;
  }

 private:
  template <class P>
  bool shape_ok(P must_vanish) const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (must_vanish(i, j) && !is_zero((*this)(i, j))) return false;
    return true;
  }
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix shape mismatch");
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<T> e_;
};

// Exact determinants: cofactor expansion up to 4x4, fraction-free Bareiss
// elimination above. Floating matrices use partial-pivoting LU.
Rat det(const Matrix<Rat>& m);
Poly det(const Matrix<Poly>& m);
RatFunc det(const Matrix<RatFunc>& m);
double det(const Matrix<double>& m);
Complex det(const Matrix<Complex>& m);

// Clears denominators row by row: m = diag(scale)^{-1} * result.
std::pair<Matrix<Poly>, std::vector<Poly>> clear_row_denominators(const Matrix<RatFunc>& m);

Matrix<RatFunc> to_ratfunc(const Matrix<Rat>& m);
Matrix<RatFunc> to_ratfunc(const Matrix<Poly>& m);
Matrix<Rat> evaluate(const Matrix<RatFunc>& m, const std::map<VarId, Rat>& values);
Matrix<double> to_double(const Matrix<Rat>& m);

// Generic n x n matrix with entries named prefix+i+j (1-based indices).
Matrix<RatFunc> generic_matrix(std::size_t n, const std::string& prefix = "g");
// Name for an indexed indeterminate, e.g. ("c", 2, 1) -> "c21"; indices
// above 9 use underscores ("x_1_12") so names stay unambiguous.
std::string indexed_name(const std::string& prefix, std::size_t i, std::size_t j);

}  // namespace extsq::algebra
