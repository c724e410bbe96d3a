#include "extsq/algebra/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "extsq/common/error.hpp"

namespace extsq::algebra {

namespace {

struct Registry {
  std::shared_mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool Vars::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

VarId Vars::intern(std::string_view name) {
  if (!valid_name(name)) throw ParseError("invalid indeterminate name '" + std::string(name) + "'");
  auto& r = registry();
  std::string key(name);
  {
    std::shared_lock lock(r.mu);
    if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mu);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  auto id = static_cast<VarId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(key, id);
  return id;
}

const std::string& Vars::name(VarId id) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return r.names.at(id);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) {
    m.f_.emplace_back(v, e);
    m.deg_ = e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (auto& [id, e] : f_)
    if (id == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first == o.f_[j].first) {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i, ++j;
    } else if (f_[i].first < o.f_[j].first) {
      r.f_.push_back(f_[i++]);
    } else {
      r.f_.push_back(o.f_[j++]);
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  std::size_t j = 0;
  for (auto& [id, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < id) ++j;
    if (j == o.f_.size() || o.f_[j].first != id || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (auto& [id, e] : f_) {
    std::uint32_t sub = 0;
    if (j < o.f_.size() && o.f_[j].first == id) sub = o.f_[j++].second;
    if (e > sub) r.f_.emplace_back(id, e - sub);
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (auto& f : f_)
    if (f.first != v) {
      r.f_.push_back(f);
      r.deg_ += f.second;
    }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first == b.f_[j].first) {
      auto e = std::min(a.f_[i].second, b.f_[j].second);
      r.f_.emplace_back(a.f_[i].first, e);
      r.deg_ += e;
      ++i, ++j;
    } else if (a.f_[i].first < b.f_[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto& [id, e] : f_) {
    h ^= id;
    h *= 1099511628211ull;
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int compare_storage(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
  }
  if (fa.size() != fb.size()) return fa.size() > fb.size() ? 1 : -1;
  return 0;
}

namespace {

std::vector<std::pair<const std::string*, std::uint32_t>> by_name(const Monomial& m) {
  std::vector<std::pair<const std::string*, std::uint32_t>> v;
  for (auto& [id, e] : m.factors()) v.emplace_back(&Vars::name(id), e);
  std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return *x.first < *y.first; });
  return v;
}

}  // namespace

int compare_canonical(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto fa = by_name(a), fb = by_name(b);
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (*fa[i].first != *fb[i].first) return *fa[i].first < *fb[i].first ? 1 : -1;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
  }
  if (fa.size() != fb.size()) return fa.size() > fb.size() ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) t_.push_back({Monomial(), c});
}

Poly Poly::var(std::string_view name) { return var(Vars::intern(name)); }

Poly Poly::var(VarId v, std::uint32_t e) { return monomial(Monomial::var(v, e), Rat(1)); }

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p;
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return compare_storage(x.m, y.m) > 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Rat Poly::constant_value() const {
  if (t_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return t_[0].c;
}

const Poly::Term& Poly::lead_canonical() const {
  if (t_.empty()) throw DomainError("leading term of zero polynomial");
  const Term* best = &t_[0];
  for (std::size_t i = 1; i < t_.size() && t_[i].m.degree() == best->m.degree(); ++i)
    if (compare_canonical(t_[i].m, best->m) > 0) best = &t_[i];
  return *best;
}

std::uint32_t Poly::degree() const { return t_.empty() ? 0 : t_[0].m.degree(); }

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (auto& t : t_) d = std::max(d, t.m.exponent(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> v;
  for (auto& t : t_)
    for (auto& f : t.m.factors()) v.push_back(f.first);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Monomial Poly::min_monomial() const {
  if (t_.empty()) return Monomial();
  Monomial g = t_[0].m;
  for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, t_[i].m);
  return g;
}

std::vector<Poly> Poly::coeffs_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (auto& t : t_) buckets[t.m.exponent(v)].push_back({t.m.without(v), t.c});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  // terms keep storage order after removing v only within a bucket up to
  // re-sorting, so rebuild through from_terms
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coeffs_in(VarId v, const std::vector<Poly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    Monomial x = Monomial::var(v, static_cast<std::uint32_t>(e));
    for (auto& t : coeffs[e].t_) terms.push_back({t.m * x, t.c});
  }
  return from_terms(std::move(terms));
}

Poly Poly::evaluate(const std::map<VarId, Rat>& values) const {
  std::vector<Term> terms;
  terms.reserve(t_.size());
  for (auto& t : t_) {
    Monomial rest;
    Rat c = t.c;
    for (auto& [id, e] : t.m.factors()) {
      if (auto it = values.find(id); it != values.end())
        c *= it->second.pow(e);
      else
        rest = rest * Monomial::var(id, e);
    }
    terms.push_back({rest, c});
  }
  return from_terms(std::move(terms));
}

Rat Poly::evaluate_all(const std::map<VarId, Rat>& values) const {
  Poly p = evaluate(values);
  if (!p.is_constant()) throw DomainError("evaluation left free indeterminates");
  return p.constant_value();
}

Poly Poly::substitute(VarId v, const Poly& p) const {
  auto cs = coeffs_in(v);
  Poly r;
  Poly pw(1);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (e > 0) pw *= p;
    if (!cs[e].is_zero()) r += cs[e] * pw;
  }
  return r;
}

Rat Poly::content() const {
  if (t_.empty()) return Rat(1);
  mpz_class g = 0, l = 1;
  for (auto& t : t_) {
    mpz_class n = t.c.num(), d = t.c.den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return Rat(g, l);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
  std::vector<Poly::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_storage(a[i].m, b[j].m);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if constexpr (Subtract) r.back().c = -r.back().c;
    } else {
      Rat s = Subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!s.is_zero()) r.push_back({a[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    r.push_back(b[j]);
    if constexpr (Subtract) r.back().c = -r.back().c;
  }
  return r;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge<false>(t_, o.t_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge<true>(t_, o.t_);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    t_.clear();
  } else if (!c.is_one()) {
    for (auto& t : t_) t.c *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.t_[0].c;
  if (b.is_constant()) return a * b.t_[0].c;
  if (a.is_monomial()) return b.mul_monomial(a.t_[0].m) * a.t_[0].c;
  if (b.is_monomial()) return a.mul_monomial(b.t_[0].m) * b.t_[0].c;
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) acc[x.m * y.m] += x.c.get() * y.c.get();
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, Rat(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return compare_storage(x.m, y.m) > 0; });
  Poly r;
  r.t_ = std::move(terms);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly r = *this;
  if (!m.is_one())
    for (auto& t : r.t_) t.m = t.m * m;
  return r;
}

Poly Poly::div_monomial(const Monomial& m) const {
  Poly r = *this;
  if (!m.is_one())
    for (auto& t : r.t_) t.m = t.m / m;
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> order;
  for (auto& t : t_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
    return compare_canonical(x->m, y->m) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rat c = t->c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    Rat a = c.abs();
    bool unit = a.is_one();
    if (!unit || t->m.is_one()) os << a.str();
    bool need_star = !unit;
    for (auto& [name, e] : by_name(t->m)) {
      if (need_star) os << "*";
      os << *name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- division

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a * b.constant_value().inverse();
  if (b.is_monomial()) {
    const auto& bm = b.lead().m;
    for (auto& t : a.terms())
      if (!bm.divides(t.m)) return std::nullopt;
    return a.div_monomial(bm) * b.lead().c.inverse();
  }
  if (a.degree() < b.degree()) return std::nullopt;
  for (VarId v : b.variables())
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;

  auto greater = [](const Monomial& x, const Monomial& y) { return compare_storage(x, y) > 0; };
  std::map<Monomial, Rat, decltype(greater)> rem(greater);
  for (auto& t : a.terms()) rem.emplace(t.m, t.c);
  const auto& lb = b.lead();
  Rat inv = lb.c.inverse();
  std::vector<Poly::Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.m.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lb.m;
    Rat qc = it->second * inv;
    rem.erase(it);
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const auto& bt = b.terms()[k];
      Monomial m = bt.m * qm;
      auto [pos, fresh] = rem.try_emplace(m, Rat(0));
      pos->second -= qc * bt.c;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    q.push_back({std::move(qm), std::move(qc)});
  }
  return Poly::from_terms(std::move(q));
}

Poly exact_divide(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw DomainError("inexact polynomial division");
  return *q;
}

}  // namespace extsq::algebra
