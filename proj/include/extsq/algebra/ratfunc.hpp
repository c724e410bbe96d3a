#pragma once

#include <map>
#include <string>
#include <string_view>

#include "extsq/algebra/poly.hpp"

namespace extsq::algebra {

// Reduced fraction of polynomials. The denominator is an integer primitive
// polynomial with positive canonical leading coefficient, so equal functions
// have identical representations.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}
  RatFunc(const Rat& c) : num_(c) {}
  RatFunc(const Poly& p) : num_(p) {}
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc var(std::string_view name) { return RatFunc(Poly::var(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  Rat evaluate(const std::map<VarId, Rat>& values) const;
  RatFunc evaluate_partial(const std::map<VarId, Rat>& values) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_ = Poly(1);
};

}  // namespace extsq::algebra
