#include "extsq/unfold/identities.hpp"

#include "extsq/algebra/decompose.hpp"

namespace extsq::unfold {

namespace {

std::size_t at(int k) { return static_cast<std::size_t>(k - 1); }

// n x n lower triangular, ones on and below the diagonal; with negate_last
// the bottom row is all -1 instead.
template <class T>
Matrix<T> ones_lower(int n, bool negate_last) {
  Matrix<T> u(at(n + 1), at(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) u(at(i), at(j)) = negate_last && i == n ? T(-1) : T(1);
  return u;
}

template <class T>
void put(Matrix<T>& dst, const Matrix<T>& src, std::size_t off) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(off + i, off + j) = src(i, j);
}

}  // namespace

template <class T>
T superdiag_sum(const UnfoldVars<T>& v) {
  auto f = algebra::nhn_decompose(build_B(v));
  T sum(0);
  for (std::size_t i = 0; i + 1 < f.n.rows(); ++i) sum += f.n(i, i + 1);
  return sum;
}

template <class T>
T superdiag_closed_form(const UnfoldVars<T>& v) {
  int n = v.n();
  T sum(0);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j) {
      sum += v.c(i, j) / v.z(i, j);
      if (i <= n - 2) sum += v.z(i, j) / v.c(i + 1, j);
    }
  for (int j = 1; j < n; ++j) sum -= v.z(n - 1, j);
  return sum;
}

template <class T>
T superdiag_x_form(const UnfoldVars<T>& v) {
  int n = v.n();
  T sum(0);
  for (int i = 1; i < n; ++i) {
    for (int j = 2 * i; j <= 2 * n - 2; ++j) sum += v.x(i, j);
    sum -= v.x(i, 2 * n - 1);
  }
  return sum;
}

template <class T>
std::pair<T, T> altsum_check(const UnfoldVars<T>& v, const Matrix<T>& b) {
  int n = v.n();
  T lhs(0), rhs(0);
  for (int j = 1; j < n; ++j) {
    rhs += v.z(n - 1, j);
    int s = n - j;
    Matrix<T> e(at(s + 1), at(s + 1));
    for (int row = 0; row < s; ++row)
      for (int col = 0; col < s; ++col) {
        int q = n - 1 - col;
        std::size_t r = static_cast<std::size_t>(row), c = static_cast<std::size_t>(col);
        if (row == s - 1)
          e(r, c) = shifted_z(b, n, n - 1, q);
        else if (int m = j + 1 + row; q <= m)
          e(r, c) = shifted_c(b, n, m, q);
      }
    T diag(1);
    for (int k = j; k < n; ++k) diag *= v.c(k, k);
    T row_sum = b(at(2 * j - 1), at(n));
    T sj = row_sum * det(e) / diag;
    if ((1 + s * (s + 1) / 2) % 2) sj = T(0) - sj;
    lhs += sj;
  }
  return {lhs, rhs};
}

template <class T>
Matrix<T> lower_factor_recursive(const UnfoldVars<T>& v) {
  Matrix<T> b = Matrix<T>::identity(1);
  for (int n = 1; n < v.n(); ++n) {
    std::size_t size = at(2 * n + 2);
    Matrix<T> d = Matrix<T>::identity(size), m1(size, size), m2(size, size), m3(size, size), m4(size, size);
    put(d, b, 0);
    put(m1, ones_lower<T>(n, false), 0);
    put(m1, ones_lower<T>(n, true), at(n + 1));
    m1(size - 1, size - 1) = T(1);
    put(m3, ones_lower<T>(n, false), 0);
    put(m3, ones_lower<T>(n + 1, false), at(n + 1));
    for (int i = 1; i <= n; ++i) {
      m2(at(i), at(i)) = v.x(i, 2 * n);
      m2(at(2 * n + 1 - i), at(2 * n + 1 - i)) = v.x(i, 2 * n);
      m4(at(i), at(i)) = v.x(i, 2 * n + 1);
      m4(at(2 * n + 2 - i), at(2 * n + 2 - i)) = v.x(i, 2 * n + 1);
    }
    m2(size - 1, size - 1) = T(1);
    m4(at(n + 1), at(n + 1)) = T(1);
    b = d * m1 * m2 * m3 * m4;
  }
  return b;
}

template <class T>
Matrix<T> lower_factor_oracle(const Matrix<T>& b) {
  auto f = algebra::nhn_decompose(b);
  return f.h * f.n_minus;
}

bool diagonal_is_signed_monomial(const Matrix<RatFunc>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const RatFunc& e = m(i, i);
    if (!e.is_polynomial() || !e.den().is_constant() || !e.num().is_monomial()) return false;
    Rat c = e.num().lead().c / e.den().constant_value();
    if (!(c.abs() == Rat(1))) return false;
  }
  return true;
}

#define EXTSQ_INSTANTIATE(T)                                                      \
  template T superdiag_sum(const UnfoldVars<T>&);                                 \
  template T superdiag_closed_form(const UnfoldVars<T>&);                         \
  template T superdiag_x_form(const UnfoldVars<T>&);                              \
  template std::pair<T, T> altsum_check(const UnfoldVars<T>&, const Matrix<T>&);  \
  template Matrix<T> lower_factor_recursive(const UnfoldVars<T>&);                \
  template Matrix<T> lower_factor_oracle(const Matrix<T>&);

EXTSQ_INSTANTIATE(Rat)
EXTSQ_INSTANTIATE(RatFunc)

}  // namespace extsq::unfold
