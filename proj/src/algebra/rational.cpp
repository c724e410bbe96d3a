#include "extsq/algebra/rational.hpp"

#include <ostream>

#include "extsq/common/error.hpp"

namespace extsq::algebra {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("bad integer '" + std::string(s) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(parse_int(text.substr(0, slash)), den);
  }
  // decimal with optional exponent
  std::string_view mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    exp10 = parse_int(text.substr(e + 1)).get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw ParseError("bad number '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw ParseError("bad number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  if (digits.empty()) digits = "0";
  mpz_class n(digits, 10);
  if (neg) n = -n;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? Rat(n, p) : Rat(mpz_class(n * p), mpz_class(1));
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace extsq::algebra
