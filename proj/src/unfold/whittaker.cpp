#include "extsq/unfold/whittaker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extsq/algebra/decompose.hpp"
#include "extsq/unfold/shuffle.hpp"

namespace extsq::unfold {

namespace {

void check_params(const EmbeddingParams& p, std::size_t m) {
  if (p.lambda.size() != m || p.delta.size() != m)
    throw DomainError("embedding parameters of length " + std::to_string(p.lambda.size()) + " for size " +
                      std::to_string(m));
}

// |h|^w sgn(h)^d for real nonzero h
Complex power_sign(double h, Complex w, Parity d) {
  Complex v = std::exp(w * std::log(std::abs(h)));
  return h < 0 && d.value() ? -v : v;
}

template <class T>
Complex assemble(const EmbeddingParams& p, double phase, const std::vector<T>& h) {
  std::size_t m = h.size();
  check_params(p, m);
  Complex acc = e_phase(phase);
  for (std::size_t j = 0; j < m; ++j) {
    double hj;
    if constexpr (std::is_same_v<T, Rat>)
      hj = h[j].to_double();
    else
      hj = h[j];
    Complex w = (static_cast<double>(m) + 1) / 2 - static_cast<double>(j + 1) - p.lambda[j].to_complex();
    acc *= power_sign(hj, w, p.delta[j]);
  }
  return acc;
}

// fractional part, exactly
double frac(const Rat& x) { return (x - Rat(mpq_class(x.floor()))).to_double(); }

}  // namespace

Complex e_phase(double x) {
  double t = x - std::floor(x);
  return std::polar(1.0, 2 * std::numbers::pi * t);
}

Complex whittaker_eval(const EmbeddingParams& p, const Matrix<Rat>& g) {
  auto f = algebra::nhn_decompose(g);
  Rat sum(0);
  std::vector<Rat> h;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    h.push_back(f.h(i, i));
    if (i + 1 < g.rows()) sum += f.n(i, i + 1);
  }
  return assemble(p, frac(sum), h);
}

Complex whittaker_eval(const EmbeddingParams& p, const Matrix<double>& g) {
  auto f = algebra::nhn_decompose(g);
  double sum = 0;
  std::vector<double> h;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    h.push_back(f.h(i, i));
    if (i + 1 < g.rows()) sum += f.n(i, i + 1);
  }
  return assemble(p, sum, h);
}

Matrix<Rat> shuffled_matrix(const UnfoldVars<Rat>& v) {
  Matrix<Rat> b = build_B(v);
  std::size_t m = b.rows() + 1;
  Matrix<Rat> g(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j) g(i, j) = b(i, j);
  g(m - 1, m - 1) = Rat(1);
  return g;
}

Complex shuffled_whittaker_oracle(const UnfoldVars<Rat>& v, const EmbeddingParams& p) {
  return whittaker_eval(p, shuffled_matrix(v));
}

Complex shuffled_whittaker_closed(const UnfoldVars<Rat>& v, const EmbeddingParams& p) {
  int n = v.n();
  check_params(p, static_cast<std::size_t>(2 * n));
  auto lam = [&](int k) { return p.lambda[static_cast<std::size_t>(k - 1)].to_complex(); };
  auto del = [&](int k) { return p.delta[static_cast<std::size_t>(k - 1)]; };
  Rat phase(0);
  Complex acc(1);
  for (int i = 1; i < n; ++i)
    for (int j = 2 * i; j <= 2 * n - 1; ++j) {
      Rat x = v.x(i, j);
      phase += j == 2 * n - 1 ? -x : x;
      Complex w = static_cast<double>(2 * n - j) - lam(i) - lam(j + 1 - i);
      acc *= power_sign(x.to_double(), w, del(i) + del(j + 1 - i));
    }
  Parity k2;
  for (int j = 1; j < n; ++j) k2 += del(2 * j);
  return acc * e_phase(frac(phase)) * static_cast<double>(k2.sign());
}

KappaSigns kappa_signs(int n, const ParityVec& delta, Parity eps, Parity eta) {
  // for n = 1 the sum over j = 2..n misses delta_n, which kappa3 counts
  if (n < 2) throw DomainError("kappa_signs needs n >= 2");
  if (delta.size() != static_cast<std::size_t>(2 * n)) throw DomainError("kappa_signs needs a parity vector of length 2n");
  auto d = [&](int k) { return delta[static_cast<std::size_t>(k - 1)]; };
  Parity total;
  for (auto x : delta) total += x;
  if (!(total == eps + Parity(n * eta.value())))
    throw PreconditionError("parity rule sum(delta) = eps + n*eta fails");
  Parity mid;
  for (int j = 2; j <= n - 1; ++j) mid += d(j);
  KappaSigns k;
  k.kappa1 = (mid + d(2 * n) + eps + Parity(eta.value() * (n * (n + 1) / 2))).sign();
  k.kappa1_prime = (mid + d(2 * n) + eps + Parity(n * eta.value())).sign();
  // kappa1 * sgn(det w_n)^eta, det w_n = (-1)^{n(n-1)/2}
  if (k.kappa1 * Parity(eta.value() * (n * (n - 1) / 2)).sign() != k.kappa1_prime)
    throw std::logic_error("kappa1' disagrees with kappa1 sgn(det w_n)^eta");
  Parity k2;
  for (int j = 1; j < n; ++j) k2 += d(2 * j);
  k.kappa2 = k2.sign();
  k.kappa3 = (eta + d(n) + d(2 * n) + eps).sign();
  Parity all = Parity((n + 1) * eta.value());
  for (int j = 2; j <= n; ++j) all += d(j);
  all += k2;
  k.kappa = all.sign();
  if (k.kappa != k.kappa1_prime * k.kappa2 * k.kappa3)
    throw std::logic_error("kappa is not kappa1' kappa2 kappa3");
  return k;
}

GammaTable unfolded_gamma_table(const EmbeddingParams& p, Parity eta) {
  std::size_t m = p.size();
  if (m < 4 || m % 2) throw DomainError("unfolded_gamma_table needs even length >= 4");
  check_params(p, m);
  int n = static_cast<int>(m / 2);
  auto lam = [&](int k) { return p.lambda[static_cast<std::size_t>(k - 1)]; };
  auto del = [&](int k) { return p.delta[static_cast<std::size_t>(k - 1)]; };
  GammaTable t;
  for (int i = 1; i < n; ++i)
    for (int j = 2 * i; j <= 2 * n - 1; ++j) {
      // |x|^{s + j - 2n - 1} from the measure times |x|^{2n - j - lambda..} leaves |x|^{s - 1 + shift}
      int measure = j - 2 * n - 1, whit = 2 * n - j;
      if (measure + whit != -1) throw std::logic_error("exponent bookkeeping");
      int a = i, b = j + 1 - i;
      t.entries.push_back({a, b, -lam(a) - lam(b), del(a) + del(b) + eta});
    }
  std::sort(t.entries.begin(), t.entries.end(),
            [](const GammaTableEntry& x, const GammaTableEntry& y) { return std::pair(x.i, x.j) < std::pair(y.i, y.j); });
  Parity total;
  for (auto x : p.delta) total += x;
  Parity eps = total + Parity(n * eta.value());
  t.sign = kappa_signs(n, p.delta, eps, eta).kappa;
  return t;
}

}  // namespace extsq::unfold
