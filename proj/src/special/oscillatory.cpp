#include "extsq/special/oscillatory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

namespace extsq::special {

namespace {

using std::numbers::pi;
using Jet = std::vector<double>;  // Taylor coefficients f(x0 + h) = sum a_k h^k

const Complex I(0.0, 1.0);

Jet mul(const Jet& a, const Jet& b) {
  Jet c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Jet recip(const Jet& a) {
  Jet b(a.size(), 0.0);
  b[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    double acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc / a[0];
  }
  return b;
}

Jet exp_jet(const Jet& a) {
  Jet b(a.size(), 0.0);
  b[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    double acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return b;
}

// exp(-1/t) as a jet in x, where t = t0 + slope * h
Jet flat(double t0, double slope, std::size_t len) {
  Jet z(len, 0.0);
  if (t0 < 1e-30) return z;
  Jet t(len, 0.0);
  t[0] = t0;
  if (len > 1) t[1] = slope;
  Jet u = recip(t);
  for (auto& v : u) v = -v;
  return exp_jet(u);
}

// Taylor coefficients of S(t(x)), the smooth step from 0 (t <= 0) to 1 (t >= 1)
Jet step_coeffs(const CutoffSpec& c, double x, std::size_t len) {
  double width = c.outer_radius - c.inner_radius;
  double t = (x - c.inner_radius) / width;
  Jet out(len, 0.0);
  if (t <= 0) return out;
  if (t >= 1) {
    out[0] = 1;
    return out;
  }
  Jet a = flat(t, 1 / width, len), b = flat(1 - t, -1 / width, len);
  Jet sum(len);
  for (std::size_t k = 0; k < len; ++k) sum[k] = a[k] + b[k];
  return mul(a, recip(sum));
}

// e(x) + (-1)^parity e(-x)
Complex fold(int parity, double x) {
  double w = 2 * pi * x;
  return parity % 2 ? 2.0 * I * std::sin(w) : Complex(2 * std::cos(w), 0.0);
}

// int_0^r x^{s-1} fold(parity, x) dx from the power series of cos / sin
Complex near_origin(int parity, Complex s, double r) {
  Complex sum = 0;
  double term = 1;  // (2 pi)^m / m!
  int m = 0;
  for (; m < 400; ++m) {
    if (m > 0) term *= 2 * pi / m;
    if (m % 2 != parity % 2) continue;
    double sgn = (m / 2) % 2 ? -1.0 : 1.0;
    Complex piece = sgn * term * std::exp((s + static_cast<double>(m)) * std::log(r)) / (s + static_cast<double>(m));
    sum += piece;
    if (m > 40 && std::abs(piece) < 1e-18 * (1 + std::abs(sum))) break;
  }
  return (parity % 2 ? 2.0 * I : Complex(2.0, 0.0)) * sum;
}

template <class F>
Complex quad(F f, double a, double b, double tol) {
  double err = 0, l1 = 0;
  Complex v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, tol, &err, &l1);
  if (err > tol * std::max(1.0, l1)) throw ToleranceError("Gauss-Kronrod on [" + std::to_string(a) + ", " +
                                                              std::to_string(b) + "] did not converge", err);
  return v;
}

// int_R^infty x^beta e^{i omega x} dx by its asymptotic expansion
Complex far_tail(Complex beta, double omega, double r) {
  Complex io = I * omega;
  Complex term = std::exp(beta * std::log(r)) / io, sum = term;
  for (int k = 1; k < 200; ++k) {
    Complex next = -term * (beta - static_cast<double>(k - 1)) / (r * io);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -std::exp(io * r) * sum;
}

}  // namespace

std::vector<double> cutoff_complement_jet(const CutoffSpec& c, double x, int order) {
  Jet j = step_coeffs(c, x, static_cast<std::size_t>(order + 1));
  double fact = 1;
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    j[static_cast<std::size_t>(k)] *= fact;
  }
  return j;
}

Complex g_delta_integral(Parity delta, Complex s, const CutoffSpec& c, double tol) {
  int nparts = c.parts_count, d = delta.value();
  if (nparts < 1) throw PreconditionError("g_delta_integral needs at least one integration by parts");
  if (!(c.inner_radius > 0 && c.inner_radius < c.outer_radius)) throw DomainError("cutoff needs 0 < inner < outer");
  if (!(s.real() > 0 && s.real() < nparts)) throw PreconditionError("g_delta_integral needs 0 < Re s < parts_count");
  std::size_t len = static_cast<std::size_t>(nparts + 1);

  // psi-piece
  Complex head = near_origin(d, s, c.inner_radius);
  head += quad(
      [&](double x) {
        double psi = 1 - step_coeffs(c, x, 1)[0];
        return psi * std::exp((s - 1.0) * std::log(x)) * fold(d, x);
      },
      c.inner_radius, c.outer_radius, tol);

  // (1 - psi)-piece after nparts integrations by parts
  auto derivative = [&](double x) {
    Jet step = step_coeffs(c, x, len);
    Complex acc = 0, power = std::exp((s - 1.0) * std::log(x));  // coefficient k of x^{s-1}
    for (std::size_t k = 0; k < len; ++k) {
      acc += step[len - 1 - k] * power;
      power *= (s - 1.0 - static_cast<double>(k)) / (static_cast<double>(k + 1) * x);
    }
    double fact = 1;
    for (int k = 2; k <= nparts; ++k) fact *= k;
    return acc * fact;
  };
  int p = d + nparts;
  Complex tail = quad([&](double x) { return derivative(x) * fold(p, x); }, c.inner_radius, c.outer_radius, tol);
  Complex falling = 1;
  for (int k = 0; k < nparts; ++k) falling *= s - 1.0 - static_cast<double>(k);
  Complex beta = s - 1.0 - static_cast<double>(nparts);
  double r_far = std::max(c.outer_radius, 24.0);
  for (double a = c.outer_radius; a < r_far; a += 1.0) {
    double b = std::min(a + 1.0, r_far);
    tail += falling * quad([&](double x) { return std::exp(beta * std::log(x)) * fold(p, x); }, a, b, tol);
  }
  Complex far = far_tail(beta, 2 * pi, r_far) + (p % 2 ? -1.0 : 1.0) * far_tail(beta, -2 * pi, r_far);
  tail += falling * far;
  Complex factor = std::pow(I / (2 * pi), nparts);
  return head + factor * tail;
}

}  // namespace extsq::special
