#include "extsq/lfactor/gamma_expr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "extsq/special/gamma.hpp"

namespace extsq::lfactor {

namespace {

namespace sf = extsq::special;

Rat from_int(const mpz_class& z) { return Rat(z, mpz_class(1)); }
Rat ceil_rat(const Rat& x) { return -from_int((-x).floor()); }

// Push base + step*m for m >= 0 with lo <= Re < hi.
void arithmetic_points(const CRat& base, const Rat& step, const Rat& lo, const std::optional<Rat>& hi,
                       std::vector<CRat>& out) {
  Rat m_lo(0), m_hi;
  if (step.sign() > 0) {
    if (!hi) throw std::logic_error("unbounded lattice toward +infinity");
    m_lo = std::max(Rat(0), ceil_rat((lo - base.re) / step));
    m_hi = ceil_rat((*hi - base.re) / step) - Rat(1);
  } else {
    Rat t = -step;
    if (hi) m_lo = std::max(Rat(0), from_int(((base.re - *hi) / t).floor()) + Rat(1));
    m_hi = from_int(((base.re - lo) / t).floor());
  }
  for (Rat m = m_lo; m <= m_hi; m += Rat(1)) out.push_back(base + CRat(step * m));
}

// Distance from z to the nearest point of {0, -step, -2 step, ...}.
double lattice_distance(Complex z, double step) {
  double k = std::min(0.0, std::round(z.real() / step));
  return std::abs(z - Complex(k * step, 0.0));
}

// true when w is a real integer, <= 0 and divisible by step
bool on_lattice(const CRat& w, long step) {
  if (!w.is_real() || !w.re.is_integer() || w.re.sign() > 0) return false;
  mpz_class n = w.re.num();
  return n % step == 0;
}

std::string arg_str(int s_sign, const CRat& shift) {
  std::string a = s_sign > 0 ? "s" : "-s";
  if (shift.is_zero()) return a;
  if (shift.is_real()) {
    std::string r = shift.re.str();
    return a + (r[0] == '-' ? r : "+" + r);
  }
  return a + "+(" + shift.str() + ")";
}

auto key(const GammaFactor& f) {
  return std::make_tuple(static_cast<int>(f.kind), f.s_sign, f.parity.value());
}

}  // namespace

CRat GammaFactor::argument(const CRat& s) const {
  return (s_sign > 0 ? s : -s) + shift;
}

Complex GammaFactor::argument(Complex s) const {
  return static_cast<double>(s_sign) * s + shift.to_complex();
}

Complex GammaFactor::eval(Complex s) const {
  Complex w = argument(s);
  switch (kind) {
    case GammaKind::R: return sf::gamma_r(w);
    case GammaKind::C: return sf::gamma_c(w);
    case GammaKind::G: return sf::g_delta(parity, w);
  }
  return {};
}

int GammaFactor::order_at(const CRat& s) const {
  CRat w = argument(s);
  switch (kind) {
    case GammaKind::R: return on_lattice(w, 2) ? 1 : 0;
    case GammaKind::C: return on_lattice(w, 1) ? 1 : 0;
    case GammaKind::G: {
      CRat d(parity.value());
      if (on_lattice(w + d, 2)) return 1;
      if (on_lattice(CRat(1) - w + d, 2)) return -1;
      return 0;
    }
  }
  return 0;
}

void GammaFactor::singular_points(const Rat& lo, const std::optional<Rat>& hi,
                                  std::vector<CRat>& out) const {
  // w = a + step*m  <=>  s = s_sign*(a - shift) + s_sign*step*m
  auto push = [&](long a, long step) {
    CRat base = CRat(a) - shift;
    if (s_sign < 0) base = -base;
    arithmetic_points(base, Rat(s_sign * step), lo, hi, out);
  };
  switch (kind) {
    case GammaKind::R: push(0, -2); break;
    case GammaKind::C: push(0, -1); break;
    case GammaKind::G:
      push(-parity.value(), -2);
      push(1 + parity.value(), 2);
      break;
  }
}

double GammaFactor::pole_distance(Complex s) const {
  Complex w = argument(s);
  switch (kind) {
    case GammaKind::R: return lattice_distance(w, 2);
    case GammaKind::C: return lattice_distance(w, 1);
    case GammaKind::G: {
      double d = parity.value();
      return std::min(lattice_distance(w + d, 2), lattice_distance(1.0 - w + d, 2));
    }
  }
  return 0;
}

std::string GammaFactor::str() const {
  std::string name = kind == GammaKind::R   ? "GammaR"
                     : kind == GammaKind::C ? "GammaC"
                                            : "G" + std::to_string(parity.value());
  return name + "(" + arg_str(s_sign, shift) + ")";
}

bool same_factor(const GammaFactor& a, const GammaFactor& b) {
  return key(a) == key(b) && a.shift == b.shift;
}

bool factor_less(const GammaFactor& a, const GammaFactor& b) {
  if (key(a) != key(b)) return key(a) < key(b);
  return a.shift < b.shift;
}

GammaExpr& GammaExpr::operator*=(const GammaExpr& o) {
  i_power = (i_power + o.i_power) % 4;
  num.insert(num.end(), o.num.begin(), o.num.end());
  den.insert(den.end(), o.den.begin(), o.den.end());
  return *this;
}

void GammaExpr::canonicalize() {
  i_power = ((i_power % 4) + 4) % 4;
  std::stable_sort(num.begin(), num.end(), factor_less);
  std::stable_sort(den.begin(), den.end(), factor_less);
}

Complex GammaExpr::constant() const {
  static const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[((i_power % 4) + 4) % 4];
}

Complex GammaExpr::eval(Complex s) const {
  Complex v = constant();
  for (auto& f : num) v *= f.eval(s);
  for (auto& f : den) v /= f.eval(s);
  return v;
}

int GammaExpr::order_at(const CRat& s) const {
  int o = 0;
  for (auto& f : num) o += f.order_at(s);
  for (auto& f : den) o -= f.order_at(s);
  return o;
}

std::vector<CRat> GammaExpr::singular_points(const Rat& lo, const std::optional<Rat>& hi) const {
  std::vector<CRat> pts;
  for (auto& f : num) f.singular_points(lo, hi, pts);
  for (auto& f : den) f.singular_points(lo, hi, pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double GammaExpr::pole_distance(Complex s) const {
  double d = INFINITY;
  for (auto& f : num) d = std::min(d, f.pole_distance(s));
  for (auto& f : den) d = std::min(d, f.pole_distance(s));
  return d;
}

GammaExpr GammaExpr::expanded() const {
  GammaExpr r;
  r.i_power = i_power;
  auto expand = [&](const GammaFactor& f, std::vector<GammaFactor>& same, std::vector<GammaFactor>& other) {
    if (f.kind != GammaKind::G) {
      same.push_back(f);
      return;
    }
    CRat d(f.parity.value());
    same.push_back(gamma_r_factor(f.shift + d, f.origin, f.s_sign));
    other.push_back(gamma_r_factor(CRat(1) - f.shift + d, f.origin, -f.s_sign));
  };
  for (auto& f : num) {
    expand(f, r.num, r.den);
    if (f.kind == GammaKind::G) r.i_power += f.parity.value();
  }
  for (auto& f : den) {
    expand(f, r.den, r.num);
    if (f.kind == GammaKind::G) r.i_power -= f.parity.value();
  }
  r.canonicalize();
  return r;
}

std::string GammaExpr::str() const {
  GammaExpr c = *this;
  c.canonicalize();
  std::string out;
  if (c.i_power) out = "i^" + std::to_string(c.i_power);
  for (auto& f : c.num) out += (out.empty() ? "" : " * ") + f.str();
  if (out.empty()) out = "1";
  for (auto& f : c.den) out += " / " + f.str();
  return out;
}

bool operator==(const GammaExpr& a, const GammaExpr& b) {
  GammaExpr x = a, y = b;
  x.canonicalize();
  y.canonicalize();
  auto same = [](const std::vector<GammaFactor>& p, const std::vector<GammaFactor>& q) {
    return std::equal(p.begin(), p.end(), q.begin(), q.end(), same_factor);
  };
  return x.i_power == y.i_power && same(x.num, y.num) && same(x.den, y.den);
}

GammaFactor gamma_r_factor(const CRat& shift, std::string origin, int s_sign) {
  return {GammaKind::R, s_sign, shift, Parity(0), std::move(origin)};
}

GammaFactor gamma_c_factor(const CRat& shift, std::string origin, int s_sign) {
  return {GammaKind::C, s_sign, shift, Parity(0), std::move(origin)};
}

GammaFactor g_factor(Parity p, const CRat& shift, std::string origin, int s_sign) {
  return {GammaKind::G, s_sign, shift, p, std::move(origin)};
}

}  // namespace extsq::lfactor
