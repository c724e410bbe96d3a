#include "extsq/special/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace extsq::special {

namespace {

using std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const Complex I(0.0, 1.0);

// i^k for integer k
Complex i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1.0;
    case 1: return I;
    case 2: return -1.0;
    default: return -I;
  }
}

}  // namespace

bool at_nonpositive_integer(Complex z, long& n) {
  if (z.imag() != 0.0 || z.real() > 0.0 || std::floor(z.real()) != z.real()) return false;
  n = static_cast<long>(z.real());
  return true;
}

Complex log_gamma(Complex z) {
  long n;
  if (at_nonpositive_integer(z, n)) throw PoleError("Gamma has a pole at " + std::to_string(n), n);
  if (z.real() < 0.5) return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  z -= 1.0;
  Complex a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (z + static_cast<double>(k));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

Complex gamma(Complex z) {
  long n;
  if (at_nonpositive_integer(z, n)) throw PoleError("Gamma has a pole at " + std::to_string(n), n);
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
  return std::exp(log_gamma(z));
}

Complex gamma_r(Complex s) {
  long n;
  if (at_nonpositive_integer(s / 2.0, n)) throw PoleError("Gamma_R has a pole at " + std::to_string(2 * n), 2 * n);
  return std::exp(-s / 2.0 * std::log(pi)) * gamma(s / 2.0);
}

Complex gamma_c(Complex s) {
  long n;
  if (at_nonpositive_integer(s, n)) throw PoleError("Gamma_C has a pole at " + std::to_string(n), n);
  return 2.0 * std::exp(-s * std::log(2 * pi)) * gamma(s);
}

Complex g_delta(Parity delta, Complex s) {
  double d = delta.value();
  long n;
  if (at_nonpositive_integer((1.0 - s + d) / 2.0, n)) return 0.0;
  if (at_nonpositive_integer((s + d) / 2.0, n))
    throw PoleError("G_" + std::to_string(delta.value()) + " has a pole at " + std::to_string(2 * n - delta.value()),
                    2 * n - delta.value());
  return i_power(delta.value()) * gamma_r(s + d) / gamma_r(1.0 - s + d);
}

GCancel gcancel(Parity eta1, Parity eta2, Complex z1, Complex z2, Complex s) {
  Complex d = z1 - z2;
  double k = std::round(d.real());
  if (std::abs(d.imag()) > 1e-12 || std::abs(d.real() - k) > 1e-12)
    throw PreconditionError("gcancel needs z1 - z2 to be an integer");
  long kk = static_cast<long>(k);
  if (!(Parity(static_cast<int>(kk % 2)) == eta1 + Parity(eta2.value()) + Parity(1)))
    throw PreconditionError("gcancel needs z1 - z2 = eta1 - eta2 + 1 mod 2");
  return {g_delta(eta1, s + z1) * g_delta(eta2, s + z2), i_power(kk + 1) * gamma_c(s + z1) / gamma_c(1.0 - s - z2)};
}

}  // namespace extsq::special
