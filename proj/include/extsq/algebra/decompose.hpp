#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "extsq/algebra/matrix.hpp"

namespace extsq::algebra {

// g = b_plus * a^{-1} * b_minus
template <class T>
struct UDLFactors {
  Matrix<T> b_plus, a, b_minus;
};

// g = n * h * n_minus
template <class T>
struct NHNFactors {
  Matrix<T> n, h, n_minus;
};

namespace detail {

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

// d_k = det of rows/cols k..n, with 1-based k; d_{n+1} = 1.
template <class T>
T trailing_minor(const Matrix<T>& g, std::size_t k) {
  std::size_t n = g.rows();
  if (k == n + 1) return T(1);
  auto idx = detail::range(k - 1, n);
  return det(g.select(idx, idx));
}

template <class T>
std::vector<T> trailing_minors(const Matrix<T>& g) {
  if (!g.square()) throw DomainError("trailing minors of non-square matrix");
  std::vector<T> d(g.rows() + 2, T(1));
  for (std::size_t k = 1; k <= g.rows(); ++k) d[k] = trailing_minor(g, k);
  return d;
}

// Entries built one by one from the subblock determinants:
//   a_ii      = d_{i+1} d_i
//   (b+)_ij   = det(rows {i} u {k > j}, cols j..n)      for i <= j
//   (b-)_ij   = det(rows i..n, cols {j} u {l > i})      for i >= j
template <class T>
UDLFactors<T> udl_explicit(const Matrix<T>& g) {
  auto d = trailing_minors(g);
  std::size_t n = g.rows();
  for (std::size_t k = 1; k <= n; ++k)
    if (is_zero(d[k])) throw DegenerateMinor(static_cast<int>(k));
  UDLFactors<T> f{Matrix<T>(n, n), Matrix<T>(n, n), Matrix<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    f.a(i, i) = d[i + 2] * d[i + 1];
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::size_t> rows{i};
      for (std::size_t k = j + 1; k < n; ++k) rows.push_back(k);
      f.b_plus(i, j) = det(g.select(rows, detail::range(j, n)));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<std::size_t> cols{j};
      for (std::size_t l = i + 1; l < n; ++l) cols.push_back(l);
      f.b_minus(i, j) = det(g.select(detail::range(i, n), cols));
    }
  }
  return f;
}

// Row elimination from the bottom pivot upward. Field entries only; the
// RatFunc overload below works fraction-free.
template <class T>
NHNFactors<T> nhn_decompose(const Matrix<T>& g) {
  if (!g.square()) throw DomainError("NHN decomposition of non-square matrix");
  std::size_t n = g.rows();
  Matrix<T> w = g;
  NHNFactors<T> f{Matrix<T>::identity(n), Matrix<T>(n, n), Matrix<T>::identity(n)};
  for (std::size_t k = n; k-- > 0;) {
    if (is_zero(w(k, k))) throw DegenerateMinor(static_cast<int>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(w(i, k))) continue;
      T m = w(i, k) / w(k, k);
      f.n(i, k) = m;
      for (std::size_t j = 0; j <= k; ++j) w(i, j) -= m * w(k, j);
      w(i, k) = T(0);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    f.h(i, i) = w(i, i);
    for (std::size_t j = 0; j < i; ++j) f.n_minus(i, j) = w(i, j) / w(i, i);
  }
  return f;
}

NHNFactors<RatFunc> nhn_decompose(const Matrix<RatFunc>& g);

// Column elimination from the bottom-right pivot leftward: g V = R with V
// unit lower and R upper. Returns b_plus = R, a = diag(R), b_minus = a V^{-1}.
template <class T>
UDLFactors<T> udl_oracle(const Matrix<T>& g) {
  if (!g.square()) throw DomainError("UDL decomposition of non-square matrix");
  std::size_t n = g.rows();
  Matrix<T> w = g, vinv = Matrix<T>::identity(n);
  for (std::size_t k = n; k-- > 0;) {
    if (is_zero(w(k, k))) throw DegenerateMinor(static_cast<int>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
      if (is_zero(w(k, j))) continue;
      T m = w(k, j) / w(k, k);
      vinv(k, j) = m;
      for (std::size_t i = 0; i <= k; ++i) w(i, j) -= m * w(i, k);
      w(k, j) = T(0);
    }
  }
  UDLFactors<T> f{w, Matrix<T>(n, n), Matrix<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    f.a(i, i) = w(i, i);
    for (std::size_t j = 0; j <= i; ++j) f.b_minus(i, j) = w(i, i) * vinv(i, j);
  }
  return f;
}

UDLFactors<RatFunc> udl_oracle(const Matrix<RatFunc>& g);

// The unique normal form behind a UDL factorization.
template <class T>
NHNFactors<T> to_nhn(const UDLFactors<T>& f) {
  std::size_t n = f.a.rows();
  NHNFactors<T> r{Matrix<T>(n, n), Matrix<T>(n, n), Matrix<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const T& p = f.b_plus(i, i);
    const T& q = f.b_minus(i, i);
    if (is_zero(p) || is_zero(q) || is_zero(f.a(i, i))) throw DegenerateMinor(static_cast<int>(i + 1));
    r.h(i, i) = p * q / f.a(i, i);
    for (std::size_t k = 0; k <= i; ++k) r.n(k, i) = k == i ? T(1) : f.b_plus(k, i) / p;
    for (std::size_t j = 0; j <= i; ++j) r.n_minus(i, j) = j == i ? T(1) : f.b_minus(i, j) / q;
  }
  return r;
}

template <class T>
Matrix<T> multiply(const UDLFactors<T>& f) {
  Matrix<T> ainv(f.a.rows(), f.a.cols());
  for (std::size_t i = 0; i < f.a.rows(); ++i) ainv(i, i) = T(1) / f.a(i, i);
  return f.b_plus * ainv * f.b_minus;
}

template <class T>
Matrix<T> multiply(const NHNFactors<T>& f) {
  return f.n * f.h * f.n_minus;
}

// h_ii = d_i / d_{i+1} (1-based i).
template <class T>
T corollary_h(const Matrix<T>& g, std::size_t i) {
  return trailing_minor(g, i) / trailing_minor(g, i + 1);
}

// n_{i,i+1} = det(rows {k >= i, k != i+1}, cols > i) / d_{i+1} (1-based i).
template <class T>
T corollary_superdiag(const Matrix<T>& g, std::size_t i) {
  std::size_t n = g.rows();
  std::vector<std::size_t> rows{i - 1};
  for (std::size_t k = i + 1; k < n; ++k) rows.push_back(k);
  return det(g.select(rows, detail::range(i, n))) / trailing_minor(g, i + 1);
}

// Exact check that b_plus * a^{-1} * b_minus == g. For polynomial factors of
// the explicit shape (a_ii = b+_ii * b+_{i+1,i+1}) it clears denominators
// with the chain d_m ... d_n instead of working with fractions.
bool udl_reconstructs(const Matrix<RatFunc>& g, const UDLFactors<RatFunc>& f);

}  // namespace extsq::algebra
