#include "extsq/euler/euler.hpp"

#include <algorithm>
#include <cmath>

#include "extsq/algebra/crat.hpp"
#include "extsq/lfactor/lfactor.hpp"

namespace extsq::euler {

namespace {

Complex p_power(long p, Complex s) { return std::exp(-s * std::log(static_cast<double>(p))); }

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_string()) return algebra::CRat::parse(j.get<std::string>()).to_complex();
  if (j.is_number()) return {j.get<double>(), 0.0};
  throw ParseError("complex value must be a string or a number");
}

std::string complex_str(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace

Complex ext2_factor(const SatakeData& d, Complex s) {
  Complex t = d.chi * p_power(d.p, s);
  Complex v(1.0, 0.0);
  for (std::size_t j = 0; j < d.alpha.size(); ++j)
    for (std::size_t k = j + 1; k < d.alpha.size(); ++k) {
      Complex f = 1.0 - d.alpha[j] * d.alpha[k] * t;
      if (f == Complex(0.0, 0.0)) throw VanishingFactor(static_cast<int>(j + 1), static_cast<int>(k + 1));
      v /= f;
    }
  return v;
}

Complex standard_factor(const SatakeData& d, Complex s) {
  Complex t = p_power(d.p, s);
  Complex v(1.0, 0.0);
  for (std::size_t j = 0; j < d.alpha.size(); ++j) {
    Complex f = 1.0 - d.alpha[j] * t;
    if (f == Complex(0.0, 0.0)) throw PoleError("standard Euler factor pole at parameter " + std::to_string(j + 1));
    v /= f;
  }
  return v;
}

std::vector<Complex> ext2_pairs(const SatakeData& d) {
  std::vector<Complex> out;
  for (std::size_t j = 0; j < d.alpha.size(); ++j)
    for (std::size_t k = j + 1; k < d.alpha.size(); ++k) out.push_back(d.alpha[j] * d.alpha[k]);
  return out;
}

double guard_value(const SatakeData& d, Complex s) {
  double m = 0;
  for (std::size_t j = 0; j < d.alpha.size(); ++j)
    for (std::size_t k = j + 1; k < d.alpha.size(); ++k) m = std::max(m, std::abs(d.alpha[j] * d.alpha[k]));
  return m * std::pow(static_cast<double>(d.p), -s.real());
}

Complex partial_L(std::vector<SatakeData> data, Complex s, double guard) {
  std::stable_sort(data.begin(), data.end(), [](const SatakeData& a, const SatakeData& b) { return a.p < b.p; });
  Complex v(1.0, 0.0);
  for (auto& d : data) {
    double g = guard_value(d, s);
    if (g > guard) throw ConvergenceGuard(d.p, g, guard);
    v *= ext2_factor(d, s);
  }
  return v;
}

Complex lambda_assembly(const lfactor::ReprData& r, const std::vector<SatakeData>& data, Complex s, double guard) {
  if (r.eta.value() != 0) throw PreconditionError("full-level assembly needs eta = 0");
  for (auto& b : r.sign_blocks)
    if (b.eps.value() != 0) throw PreconditionError("full-level assembly needs every eps = 0");
  return lfactor::l_inf(r).eval(s) * partial_L(data, s, guard);
}

SatakeData dual(const SatakeData& d) {
  SatakeData c = d;
  for (auto& a : c.alpha) a = std::conj(a);
  c.chi = std::conj(c.chi);
  return c;
}

std::vector<long> primes_below(long x) {
  std::vector<long> out;
  if (x <= 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(x), false);
  for (long i = 2; i < x; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long k = i * i; k < x; k += i) composite[static_cast<std::size_t>(k)] = true;
  }
  return out;
}

algebra::Poly ext2_reciprocal(int m) {
  using algebra::Poly;
  Poly chi_t = Poly::var("chi") * Poly::var("t");
  Poly v(1);
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k)
      v *= Poly(1) - Poly::var("a" + std::to_string(j)) * Poly::var("a" + std::to_string(k)) * chi_t;
  return v;
}

algebra::Poly standard_reciprocal(int m) {
  using algebra::Poly;
  Poly v(1);
  for (int j = 1; j <= m; ++j) v *= Poly(1) - Poly::var("a" + std::to_string(j)) * Poly::var("t");
  return v;
}

SatakeData satake_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Satake data must be an object");
  SatakeData d;
  if (j.contains("p")) {
    if (!j.at("p").is_number_integer()) throw ParseError("'p' must be an integer");
    d.p = j.at("p").get<long>();
  }
  if (!j.contains("alpha") || !j.at("alpha").is_array()) throw ParseError("missing array 'alpha'");
  for (auto& a : j.at("alpha")) d.alpha.push_back(complex_from_json(a));
  if (d.alpha.empty() || d.alpha.size() % 2) throw ParseError("'alpha' must have even positive length");
  if (j.contains("chi")) d.chi = complex_from_json(j.at("chi"));
  auto ps = primes_below(d.p + 1);
  if (d.p < 2 || ps.empty() || ps.back() != d.p) throw DomainError(std::to_string(d.p) + " is not prime");
  return d;
}

nlohmann::json satake_to_json(const SatakeData& d) {
  nlohmann::json j;
  j["p"] = d.p;
  j["alpha"] = nlohmann::json::array();
  for (auto& a : d.alpha) j["alpha"].push_back(complex_str(a));
  j["chi"] = complex_str(d.chi);
  return j;
}

SatakeData random_satake(std::mt19937_64& rng, long p, int m) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  SatakeData d;
  d.p = p;
  for (int j = 0; j < m; ++j) d.alpha.push_back(std::polar(1.0, angle(rng)));
  return d;
}

}  // namespace extsq::euler
