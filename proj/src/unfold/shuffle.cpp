#include "extsq/unfold/shuffle.hpp"

namespace extsq::unfold {

namespace {

std::size_t at(int k) { return static_cast<std::size_t>(k - 1); }

std::vector<std::size_t> span(int lo, int hi) {
  std::vector<std::size_t> v;
  for (int k = lo; k <= hi; ++k) v.push_back(at(k));
  return v;
}

// (-1)^{size-1}
int corner_sign(int size) { return size % 2 ? 1 : -1; }

}  // namespace

int ShuffleSigma::sign() const {
  std::vector<bool> seen(image.size(), false);
  int s = 1;
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !seen[j]; j = at(image[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

ShuffleSigma sigma(int n_half) {
  if (n_half < 1) throw DomainError("sigma needs n >= 1");
  int m = 2 * n_half;
  ShuffleSigma s{n_half, std::vector<int>(static_cast<std::size_t>(m)), Matrix<Rat>(at(m + 1), at(m + 1))};
  for (int k = 1; k < m; ++k) {
    int r = (2 * k - 1) % (m - 1);
    s.image[at(k)] = r == 0 ? m - 1 : r;
  }
  s.image[at(m)] = m;
  for (int k = 1; k <= m; ++k) s.matrix(at(s.image[at(k)]), at(k)) = Rat(1);
  return s;
}

int sigma_sign_rule(int n_half) { return n_half % 4 == 0 || n_half % 4 == 1 ? 1 : -1; }

template <class T>
Matrix<T> build_block_A(const UnfoldVars<T>& v) {
  int n = v.n(), m = 2 * n - 1;
  Matrix<T> a(at(m + 1), at(m + 1));
  for (int r = 1; r < n; ++r) {
    T sum(0);
    for (int j = 1; j <= r; ++j) {
      a(at(2 * r - 1), at(j)) = v.c(r, j);
      a(at(2 * r), at(2 * n - j)) = v.c(r, j);
      sum += v.c(r, j);
    }
    a(at(2 * r - 1), at(n)) = sum;
  }
  a(at(m), at(n)) = T(1);
  for (int r = 2; r <= n; ++r)
    for (int i = 1; i < r; ++i) a(at(2 * r - 1), at(2 * n - i)) = v.z(r - 1, i);
  return a;
}

template <class T>
Matrix<T> assembled_product(const UnfoldVars<T>& v) {
  int n = v.n();
  std::size_t un = at(n + 1), m = 2 * un;
  Matrix<T> blk(m, m), f(m, m);
  for (int r = 1; r < n; ++r)
    for (int j = 1; j <= r; ++j) {
      blk(at(r), at(j)) = v.c(r, j);
      blk(un + at(r), un + at(j)) = v.c(r, j);
      blk(at(r + 1), un + at(j)) = v.z(r, j);
    }
  blk(at(n), at(n)) = T(1);
  blk(m - 1, m - 1) = T(1);
  for (std::size_t i = 0; i < un; ++i) {
    f(i, i) = T(1);
    f(i, un - 1) = T(1);
  }
  for (std::size_t i = 0; i + 1 < un; ++i) f(un + i, un + (un - 2 - i)) = T(1);
  f(m - 1, m - 1) = T(1);
  Matrix<T> s = sigma(n).matrix.map([](const Rat& x) { return T(x); });
  return s * blk * f;
}

template <class T>
T corner_block_det(const Matrix<T>& b, int n, int a, int row) {
  int last = 2 * n - 1, col = 2 * n - a;
  if (row > last) return T(1);
  int size = last - row + 1;
  return det(b.select(span(row, last), span(col - size + 1, col)));
}

template <class T>
Matrix<T> build_B(const UnfoldVars<T>& v) {
  int n = v.n();
  Matrix<T> b = build_block_A(v);
  for (int row = 2 * n - 2; row >= 3; --row)
    for (int a = (row - 1) / 2; a >= 1; --a) {
      std::size_t pi = at(row), pj = at(2 * n - a);
      T old = b(pi, pj);
      b(pi, pj) = T(0);
      T rest = corner_block_det(b, n, a, row);
      T succ = corner_block_det(b, n, a + 1, row + 1);
      if (algebra::is_zero(succ))
        throw DomainError("vanishing successor determinant while shifting y(" + std::to_string(a) + "," +
                          std::to_string(row) + ")");
      T q = rest / succ;
      T t = corner_sign(2 * n - row) > 0 ? v.y(a, row) - q : v.y(a, row) + q;
      b(pi, pj) = t;
      if (row % 2 == 0) {
        // c(r, a) also sits on the left and inside the sum column
        std::size_t up = at(row - 1);
        b(up, at(a)) = t;
        b(up, at(n)) += t - old;
      }
    }
  return b;
}

template <class T>
std::vector<std::pair<int, int>> determinantal_failures(const Matrix<T>& b, const UnfoldVars<T>& v) {
  int n = v.n();
  std::vector<std::pair<int, int>> bad;
  for (int a = 1; a < n; ++a)
    for (int row = 2 * a; row <= 2 * n - 1; ++row) {
      T lhs = corner_block_det(b, n, a, row);
      T rhs = corner_block_det(b, n, a + 1, row + 1) * v.y(a, row);
      if (corner_sign(2 * n - row) < 0) rhs = T(0) - rhs;
      if (!(lhs == rhs)) bad.emplace_back(a, row);
    }
  return bad;
}

template <class T>
Matrix<T> slice_last_column(const Matrix<T>& a) {
  if (!a.square() || a.rows() == 0) throw DomainError("slice_last_column needs a nonempty square matrix");
  int m = static_cast<int>(a.rows());
  Matrix<T> out = a;
  for (int k = m; k >= 1; --k) {
    T orig = a(at(k), at(m));
    out(at(k), at(m)) = T(0);
    T rest = det(out.select(span(k, m), span(k, m)));
    T minor = k == m ? T(1) : det(a.select(span(k + 1, m), span(k, m - 1)));
    if (algebra::is_zero(minor)) throw DomainError("slice_last_column: vanishing minor at row " + std::to_string(k));
    T q = rest / minor;
    out(at(k), at(m)) = (m - k) % 2 == 0 ? orig - q : orig + q;
  }
  return out;
}

#define EXTSQ_INSTANTIATE(T)                                                                       \
  template Matrix<T> build_block_A(const UnfoldVars<T>&);                                          \
  template Matrix<T> assembled_product(const UnfoldVars<T>&);                                      \
  template Matrix<T> build_B(const UnfoldVars<T>&);                                                \
  template T corner_block_det(const Matrix<T>&, int, int, int);                                    \
  template std::vector<std::pair<int, int>> determinantal_failures(const Matrix<T>&, const UnfoldVars<T>&); \
  template Matrix<T> slice_last_column(const Matrix<T>&);

EXTSQ_INSTANTIATE(Rat)
EXTSQ_INSTANTIATE(RatFunc)

}  // namespace extsq::unfold
