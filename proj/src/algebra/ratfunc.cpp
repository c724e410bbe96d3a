#include "extsq/algebra/ratfunc.hpp"

#include "extsq/common/error.hpp"

namespace extsq::algebra {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Rat c = den_.content();
  if (den_.lead_canonical().c.sign() < 0) c = -c;
  if (!c.is_one()) {
    Rat inv = c.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * den_.constant_value().inverse() + o.num_ * o.den_.constant_value().inverse();
    den_ = Poly(1);
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
  Poly g = gcd(den_, o.den_);
  Poly bg = exact_divide(den_, g), dg = exact_divide(o.den_, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = den_ * dg;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_ * (den_.constant_value() * o.den_.constant_value()).inverse();
    den_ = Poly(1);
    return *this;
  }
  // cross-cancel before multiplying
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly a = exact_divide(num_, g1), d = exact_divide(o.den_, g1);
  Poly c = exact_divide(o.num_, g2), b = exact_divide(den_, g2);
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

Rat RatFunc::evaluate(const std::map<VarId, Rat>& values) const {
  Rat d = den_.evaluate_all(values);
  if (d.is_zero()) throw DomainError("rational function evaluated at a denominator zero");
  return num_.evaluate_all(values) / d;
}

RatFunc RatFunc::evaluate_partial(const std::map<VarId, Rat>& values) const {
  Poly d = den_.evaluate(values);
  if (d.is_zero()) throw DomainError("rational function evaluated at a denominator zero");
  return RatFunc(num_.evaluate(values), d);
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || den_.terms()[0].m.factors().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace extsq::algebra
