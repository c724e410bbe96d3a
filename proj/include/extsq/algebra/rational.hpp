#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace extsq::algebra {

// Canonical rational number: reduced, positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "p/q", decimals like "-0.25" and "1.5e-3".
  static Rat parse(std::string_view text);

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& get() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat inverse() const;
  Rat pow(long e) const;
  // Largest integer <= this.
  mpz_class floor() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace extsq::algebra
