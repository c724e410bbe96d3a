#pragma once

#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "extsq/algebra/poly.hpp"
#include "extsq/common/error.hpp"
#include "extsq/lfactor/repr.hpp"

namespace extsq::euler {

using Complex = std::complex<double>;

struct SatakeData {
  long p = 2;
  std::vector<Complex> alpha;  // length 2n
  Complex chi{1.0, 0.0};       // chi(p): unit modulus, or 0
};

// 1 - alpha_j alpha_k chi(p) p^{-s} vanished; j < k are 1-based.
class VanishingFactor : public PoleError {
 public:
  VanishingFactor(int j, int k)
      : PoleError("Euler factor pole at pair (" + std::to_string(j) + "," + std::to_string(k) + ")"),
        j_(j), k_(k) {}
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int j_, k_;
};

// max |alpha_j alpha_k| p^{-Re s} exceeded the guard.
class ConvergenceGuard : public DomainError {
 public:
  ConvergenceGuard(long p, double value, double guard)
      : DomainError("convergence guard violated at p = " + std::to_string(p) + ": " +
                    std::to_string(value) + " > " + std::to_string(guard)),
        p_(p) {}
  long p() const { return p_; }

 private:
  long p_;
};

// prod_{j<k} (1 - alpha_j alpha_k chi(p) p^{-s})^{-1}
Complex ext2_factor(const SatakeData& d, Complex s);
// prod_j (1 - alpha_j p^{-s})^{-1}
Complex standard_factor(const SatakeData& d, Complex s);

// alpha_j alpha_k for j < k, in lexicographic pair order
std::vector<Complex> ext2_pairs(const SatakeData& d);

// max_{j<k} |alpha_j alpha_k| p^{-Re s}
double guard_value(const SatakeData& d, Complex s);

// Product of ext2_factor over the data, taken in increasing p.
Complex partial_L(std::vector<SatakeData> data, Complex s, double guard = 0.99);

// l_inf(r)(s) * partial_L(data, s). Full level only: eta = 0 and every eps = 0.
Complex lambda_assembly(const lfactor::ReprData& r, const std::vector<SatakeData>& data, Complex s,
                        double guard = 0.99);

// Contragredient local data: conjugated Satake parameters and chi.
SatakeData dual(const SatakeData& d);

// Primes below x by the sieve of Eratosthenes.
std::vector<long> primes_below(long x);

// prod_{j<k} (1 - a_j a_k chi t) and prod_j (1 - a_j t) in the variables
// a1..am, chi, t.
algebra::Poly ext2_reciprocal(int m);
algebra::Poly standard_reciprocal(int m);

SatakeData satake_from_json(const nlohmann::json& j);
nlohmann::json satake_to_json(const SatakeData& d);

// Parameters on the unit circle and chi = 1.
SatakeData random_satake(std::mt19937_64& rng, long p, int m);

}  // namespace extsq::euler
