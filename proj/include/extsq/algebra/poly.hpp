#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extsq/algebra/rational.hpp"

namespace extsq::algebra {

using VarId = std::uint32_t;

// Process-wide, append-only table of indeterminate names.
class Vars {
 public:
  static VarId intern(std::string_view name);
  static const std::string& name(VarId id);
  static bool valid_name(std::string_view name);
};

class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial var(VarId v, std::uint32_t e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial without(VarId v) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  bool operator==(const Monomial& o) const { return f_ == o.f_; }

 private:
  std::vector<Factor> f_;  // sorted by VarId, exponents > 0
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded lex, ties broken with lower VarId more significant. Storage order.
int compare_storage(const Monomial& a, const Monomial& b);
// Graded lex over variable names. Canonical order for printing and signs.
int compare_canonical(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q.
class Poly {
 public:
  struct Term {
    Monomial m;
    Rat c;
    bool operator==(const Term& o) const { return c == o.c && m == o.m; }
  };

  Poly() = default;
  Poly(long c) : Poly(Rat(c)) {}
  Poly(const Rat& c);
  static Poly var(std::string_view name);
  static Poly var(VarId v, std::uint32_t e = 1);
  static Poly monomial(const Monomial& m, const Rat& c);
  // Takes terms in any order; merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_monomial() const { return t_.size() == 1; }
  Rat constant_value() const;  // requires is_constant()
  const Term& lead() const { return t_.front(); }  // storage order
  const Term& lead_canonical() const;

  std::uint32_t degree() const;
  std::uint32_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;
  Monomial min_monomial() const;

  // Coefficients w.r.t. v, indexed by exponent.
  std::vector<Poly> coeffs_in(VarId v) const;
  static Poly from_coeffs_in(VarId v, const std::vector<Poly>& coeffs);

  Poly evaluate(const std::map<VarId, Rat>& values) const;
  Rat evaluate_all(const std::map<VarId, Rat>& values) const;
  Poly substitute(VarId v, const Poly& p) const;

  // Positive rational c with (*this)/c integral and primitive.
  Rat content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly pow(unsigned e) const;
  Poly mul_monomial(const Monomial& m) const;
  Poly div_monomial(const Monomial& m) const;  // requires m to divide every term

  bool operator==(const Poly& o) const { return t_ == o.t_; }

  std::string str() const;

 private:
  std::vector<Term> t_;  // sorted descending by compare_storage
};

// Quotient if b divides a exactly.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);
// Throws DomainError if the division is not exact.
Poly exact_divide(const Poly& a, const Poly& b);

// Greatest common divisor, normalized to an integer primitive polynomial
// with positive canonical leading coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace extsq::algebra
