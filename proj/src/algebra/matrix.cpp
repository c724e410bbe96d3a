#include "extsq/algebra/matrix.hpp"

#include <cmath>

namespace extsq::algebra {

namespace {

template <class T>
void require_square(const Matrix<T>& m) {
  if (!m.square())
    throw DomainError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
}

// Laplace expansion along the first row of the given row/column subset.
template <class T>
T cofactor(const Matrix<T>& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m(row, cols[0]);
  T acc(0);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const T& a = m(row, cols[k]);
    if (is_zero(a)) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    T minor = cofactor(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    if (is_zero(minor)) continue;
    if (k % 2 == 0)
      acc += a * minor;
    else
      acc -= a * minor;
  }
  return acc;
}

template <class T, class Div>
T bareiss(Matrix<T> a, Div exact_div) {
  std::size_t n = a.rows();
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(k, k) * a(i, j);
        if (!is_zero(a(i, k)) && !is_zero(a(k, j))) v -= a(i, k) * a(k, j);
        a(i, j) = exact_div(v, prev);
      }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T(0) - d : d;
}

template <class T, class Div>
T exact_det(const Matrix<T>& m, Div exact_div) {
  require_square(m);
  if (m.rows() == 0) return T(1);
  if (m.rows() <= 4) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return cofactor(m, 0, cols);
  }
  return bareiss(m, exact_div);
}

template <class T>
T lu_det(Matrix<T> a) {
  require_square(a);
  std::size_t n = a.rows();
  T d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (is_zero(a(p, k))) return T(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

}  // namespace

Rat det(const Matrix<Rat>& m) {
  return exact_det(m, [](const Rat& a, const Rat& b) { return a / b; });
}

Poly det(const Matrix<Poly>& m) {
  return exact_det(m, [](const Poly& a, const Poly& b) { return exact_divide(a, b); });
}

std::pair<Matrix<Poly>, std::vector<Poly>> clear_row_denominators(const Matrix<RatFunc>& m) {
  Matrix<Poly> p(m.rows(), m.cols());
  std::vector<Poly> scale(m.rows(), Poly(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      if (d.is_constant()) continue;
      if (auto q = try_divide(l, d); q) continue;
      l = l * exact_divide(d, gcd(l, d));
    }
    scale[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) p(i, j) = m(i, j).num() * exact_divide(l, m(i, j).den());
  }
  return {std::move(p), std::move(scale)};
}

RatFunc det(const Matrix<RatFunc>& m) {
  require_square(m);
  auto [p, scale] = clear_row_denominators(m);
  Poly d = det(p);
  Poly s(1);
  for (auto& x : scale) s *= x;
  return RatFunc(d, s);
}

double det(const Matrix<double>& m) { return lu_det(m); }
Complex det(const Matrix<Complex>& m) { return lu_det(m); }

Matrix<RatFunc> to_ratfunc(const Matrix<Rat>& m) {
  return m.map([](const Rat& x) { return RatFunc(x); });
}

Matrix<RatFunc> to_ratfunc(const Matrix<Poly>& m) {
  return m.map([](const Poly& x) { return RatFunc(x); });
}

Matrix<Rat> evaluate(const Matrix<RatFunc>& m, const std::map<VarId, Rat>& values) {
  return m.map([&](const RatFunc& x) { return x.evaluate(values); });
}

Matrix<double> to_double(const Matrix<Rat>& m) {
  return m.map([](const Rat& x) { return x.to_double(); });
}

std::string indexed_name(const std::string& prefix, std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return prefix + std::to_string(i) + std::to_string(j);
  return prefix + "_" + std::to_string(i) + "_" + std::to_string(j);
}

Matrix<RatFunc> generic_matrix(std::size_t n, const std::string& prefix) {
  Matrix<RatFunc> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = RatFunc::var(indexed_name(prefix, i + 1, j + 1));
  return m;
}

}  // namespace extsq::algebra
