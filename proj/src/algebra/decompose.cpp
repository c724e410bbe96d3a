#include "extsq/algebra/decompose.hpp"

namespace extsq::algebra {

namespace {

// Fraction-free elimination from the bottom-right corner. After the call,
// pivots[k] is the trailing minor of rows/cols k..n-1 and col[k][i],
// row[k][j] hold the eliminated column/row numerators at step k.
struct FractionFree {
  std::vector<Poly> pivots;  // size n + 1, pivots[n] = 1
  Matrix<Poly> col, row;     // col(i, k) for i < k, row(k, j) for j < k
};

FractionFree eliminate(Matrix<Poly> w) {
  std::size_t n = w.rows();
  FractionFree ff{std::vector<Poly>(n + 1, Poly(1)), Matrix<Poly>(n, n), Matrix<Poly>(n, n)};
  Poly prev(1);
  for (std::size_t k = n; k-- > 0;) {
    Poly pk = w(k, k);
    if (pk.is_zero()) throw DegenerateMinor(static_cast<int>(k + 1));
    for (std::size_t i = 0; i < k; ++i) ff.col(i, k) = w(i, k);
    for (std::size_t j = 0; j < k; ++j) ff.row(k, j) = w(k, j);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Poly v = pk * w(i, j);
        if (!w(i, k).is_zero() && !w(k, j).is_zero()) v -= w(i, k) * w(k, j);
        w(i, j) = exact_divide(v, prev);
      }
    ff.pivots[k] = pk;
    prev = pk;
  }
  return ff;
}

}  // namespace

NHNFactors<RatFunc> nhn_decompose(const Matrix<RatFunc>& g) {
  if (!g.square()) throw DomainError("NHN decomposition of non-square matrix");
  std::size_t n = g.rows();
  auto [p, r] = clear_row_denominators(g);
  FractionFree ff = eliminate(std::move(p));
  // p = diag(r) g, so g = (r^{-1} n' r)(r^{-1} h') n'_-
  NHNFactors<RatFunc> f{Matrix<RatFunc>::identity(n), Matrix<RatFunc>(n, n),
                        Matrix<RatFunc>::identity(n)};
  for (std::size_t k = 0; k < n; ++k) {
    f.h(k, k) = RatFunc(ff.pivots[k], ff.pivots[k + 1] * r[k]);
    for (std::size_t i = 0; i < k; ++i)
      if (!ff.col(i, k).is_zero()) f.n(i, k) = RatFunc(ff.col(i, k) * r[k], ff.pivots[k] * r[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (!ff.row(k, j).is_zero()) f.n_minus(k, j) = RatFunc(ff.row(k, j), ff.pivots[k]);
  }
  return f;
}

UDLFactors<RatFunc> udl_oracle(const Matrix<RatFunc>& g) {
  if (!g.square()) throw DomainError("UDL decomposition of non-square matrix");
  std::size_t n = g.rows();
  auto [q, c] = clear_row_denominators(g.transpose());
  // g = p diag(c)^{-1} with p = q^T; eliminate columns of p
  FractionFree ff = eliminate(q.transpose());
  UDLFactors<RatFunc> f{Matrix<RatFunc>(n, n), Matrix<RatFunc>(n, n), Matrix<RatFunc>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    // column k of the upper factor is the step-k column over the previous pivot
    const Poly& prev = ff.pivots[k + 1];
    f.b_plus(k, k) = RatFunc(ff.pivots[k], prev * c[k]);
    for (std::size_t i = 0; i < k; ++i)
      if (!ff.col(i, k).is_zero()) f.b_plus(i, k) = RatFunc(ff.col(i, k), prev * c[k]);
    f.a(k, k) = f.b_plus(k, k);
    f.b_minus(k, k) = f.a(k, k);
    for (std::size_t j = 0; j < k; ++j)
      if (!ff.row(k, j).is_zero())
        f.b_minus(k, j) = f.a(k, k) * RatFunc(ff.row(k, j) * c[k], ff.pivots[k] * c[j]);
  }
  return f;
}

bool udl_reconstructs(const Matrix<RatFunc>& g, const UDLFactors<RatFunc>& f) {
  std::size_t n = g.rows();
  if (!g.square() || f.a.rows() != n || f.b_plus.rows() != n || f.b_minus.rows() != n) return false;
  if (!f.b_plus.is_upper() || !f.b_minus.is_lower() || !f.a.is_diagonal()) return false;
  bool structured = true;
  std::vector<Poly> d(n + 1, Poly(1));
  for (std::size_t k = 0; k < n && structured; ++k) {
    structured = f.b_plus(k, k).is_polynomial() && f.a(k, k).is_polynomial();
    if (structured) d[k] = f.b_plus(k, k).num();
  }
  for (std::size_t i = 0; i < n && structured; ++i)
    for (std::size_t j = 0; j < n && structured; ++j)
      structured = f.b_plus(i, j).is_polynomial() && f.b_minus(i, j).is_polynomial();
  for (std::size_t k = 0; k < n && structured; ++k) structured = f.a(k, k).num() == d[k] * d[k + 1];
  if (!structured) return multiply(f) == g;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t m = std::max(i, j);
      Poly lhs;
      for (std::size_t k = m; k < n; ++k) {
        if (f.b_plus(i, k).is_zero() || f.b_minus(k, j).is_zero()) continue;
        Poly t = f.b_plus(i, k).num() * f.b_minus(k, j).num();
        for (std::size_t q = m; q < n; ++q)
          if (q != k && q != k + 1) t *= d[q];
        lhs += t;
      }
      Poly chain(1);
      for (std::size_t q = m; q < n; ++q) chain *= d[q];
      if (!(lhs * g(i, j).den() == g(i, j).num() * chain)) return false;
    }
  return true;
}

}  // namespace extsq::algebra
