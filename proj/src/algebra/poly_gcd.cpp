// Multivariate gcd over Q: cheap structural reductions, an evaluation-image
// coprimality certificate, and a recursive primitive PRS as the general case.
#include <algorithm>
#include <cstdint>

#include "extsq/algebra/poly.hpp"
#include "extsq/common/error.hpp"

namespace extsq::algebra {

namespace {

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rat c = p.content();
  if (p.lead_canonical().c.sign() < 0) c = -c;
  return c.is_one() ? p : p * c.inverse();
}

// Dense univariate image of p in x after substituting the point for every
// other variable.
std::vector<Rat> image(const Poly& p, VarId x, const std::map<VarId, Rat>& pt) {
  std::vector<Rat> out(p.degree_in(x) + 1, Rat(0));
  for (auto& t : p.terms()) {
    Rat v = t.c;
    std::uint32_t ex = 0;
    for (auto& [id, e] : t.m.factors()) {
      if (id == x)
        ex = e;
      else
        v *= pt.at(id).pow(e);
    }
    out[ex] += v;
  }
  return out;
}

void trim(std::vector<Rat>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Degree of gcd of two dense univariate polynomials over Q.
int univariate_gcd_degree(std::vector<Rat> a, std::vector<Rat> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Rat inv = b.back().inverse();
    while (a.size() >= b.size()) {
      Rat f = a.back() * inv;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Upper bound for deg_x gcd(a, b) from one good evaluation image; -1 if no
// good point was found quickly.
int image_degree_bound(const Poly& a, const Poly& b, VarId x) {
  std::vector<VarId> others;
  for (VarId v : a.variables())
    if (v != x) others.push_back(v);
  for (VarId v : b.variables())
    if (v != x) others.push_back(v);
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(x) << 17);
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((state >> 33) % 997) + 3;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::map<VarId, Rat> pt;
    for (VarId v : others) pt.emplace(v, Rat(next()));
    auto ia = image(a, x, pt), ib = image(b, x, pt);
    if (ia.back().is_zero() || ib.back().is_zero()) continue;
    return univariate_gcd_degree(std::move(ia), std::move(ib));
  }
  return -1;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly gcd_list(Poly g, std::vector<Poly> list) {
  std::sort(list.begin(), list.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  for (auto& c : list) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_rec(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly content_in(const Poly& p, VarId x) { return gcd_list(Poly(), p.coeffs_in(x)); }

using Dense = std::vector<Poly>;  // coefficients in the main variable

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense primitive_part(Dense a) {
  Poly c = gcd_list(Poly(), a);
  c = c * c.content().inverse();
  for (auto& t : a) t = exact_divide(t, c);
  // keep integer coefficients small
  Rat k = Rat(1);
  {
    mpz_class g = 0, l = 1;
    for (auto& t : a)
      for (auto& term : t.terms()) {
        mpz_class n = term.c.num(), d = term.c.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      }
    if (g != 0) k = Rat(l, g);
  }
  if (!k.is_one())
    for (auto& t : a) t *= k;
  return a;
}

Dense pseudo_remainder(Dense r, const Dense& b) {
  const Poly& lc = b.back();
  std::size_t db = b.size() - 1;
  int e = static_cast<int>(r.size()) - static_cast<int>(db);
  while (!r.empty() && r.size() - 1 >= db) {
    Poly t = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lc;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= t * b[i];
    r.pop_back();
    trim(r);
    --e;
  }
  if (e > 0) {
    Poly f = lc.pow(static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

Poly prs(const Poly& a, const Poly& b, VarId x) {
  Dense pa = a.coeffs_in(x), pb = b.coeffs_in(x);
  Poly ca = gcd_list(Poly(), pa), cb = gcd_list(Poly(), pb);
  Poly c = gcd_rec(ca, cb);
  for (auto& t : pa) t = exact_divide(t, ca);
  for (auto& t : pb) t = exact_divide(t, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    Dense r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) return c;
    pa = std::move(pb);
    pb = primitive_part(std::move(r));
  }
  pb = primitive_part(std::move(pb));
  return c * Poly::from_coeffs_in(x, pb);
}

bool contains(const std::vector<VarId>& v, VarId x) { return std::binary_search(v.begin(), v.end(), x); }

// Neither argument has a monomial factor.
Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.size() >= b.size()) {
    if (try_divide(a, b)) return normalize(b);
  } else if (try_divide(b, a)) {
    return normalize(a);
  }
  auto va = a.variables(), vb = b.variables();
  for (VarId v : va)
    if (!contains(vb, v)) return gcd_list(b, a.coeffs_in(v));
  for (VarId v : vb)
    if (!contains(va, v)) return gcd_list(a, b.coeffs_in(v));
  // same variable set; order by degree so cheap eliminations come first
  std::vector<std::pair<std::uint32_t, VarId>> order;
  for (VarId v : va) order.emplace_back(std::max(a.degree_in(v), b.degree_in(v)), v);
  std::sort(order.begin(), order.end());
  for (auto& [d, v] : order) {
    if (image_degree_bound(a, b, v) == 0) return gcd_rec(content_in(a, v), content_in(b, v));
  }
  return prs(a, b, order.front().second);
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  Monomial ma = a.min_monomial(), mb = b.min_monomial();
  Monomial m = Monomial::gcd(ma, mb);
  Poly g = gcd_core(a.div_monomial(ma), b.div_monomial(mb));
  return normalize(g.mul_monomial(m));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  return gcd_rec(a, b);
}

}  // namespace extsq::algebra
