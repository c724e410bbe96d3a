#include "extsq/lfactor/lfactor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "extsq/common/error.hpp"

namespace extsq::lfactor {

namespace {

const Rat kHalf(mpz_class(1), mpz_class(2));
const Rat kQuarter(mpz_class(1), mpz_class(4));

CRat half_int(long k) { return CRat(Rat(mpz_class(k), mpz_class(2))); }

// Gamma_C(s + x + y) / Gamma_C(1 - s - x + y)
GammaExpr gamma_c_ratio(const CRat& x, const CRat& shift) {
  GammaExpr g;
  g.num.push_back(gamma_c_factor(x + shift));
  g.den.push_back(gamma_c_factor(CRat(1) - x + shift, {}, -1));
  return g;
}

void sort_poles(PoleList& p) {
  std::sort(p.begin(), p.end(), [](const PoleEntry& a, const PoleEntry& b) {
    if (!(a.location == b.location)) return a.location < b.location;
    return a.family < b.family;
  });
}

PoleList aggregate(const std::vector<PoleEntry>& raw) {
  std::map<std::pair<std::pair<Rat, Rat>, std::string>, int> acc;
  for (auto& e : raw) acc[{{e.location.re, e.location.im}, e.family}] += e.order;
  PoleList out;
  for (auto& [key, order] : acc) out.push_back({CRat(key.first.first, key.first.second), order, key.second});
  sort_poles(out);
  return out;
}

}  // namespace

GammaExpr l_inf(const ReprData& r) {
  require_valid(r);
  ReprData q = normalized(r);
  const auto& sb = q.sign_blocks;
  const auto& db = q.ds_blocks;
  GammaExpr g;
  for (auto& b : db) g.num.push_back(gamma_r_factor(CRat(2) * b.s + CRat(Parity(b.k + q.eta.value()).value()), "ds-self"));
  for (auto& a : sb)
    for (auto& b : db) g.num.push_back(gamma_c_factor(a.s + b.s + half_int(b.k - 1), "sign-ds"));
  for (std::size_t i = 0; i < sb.size(); ++i)
    for (std::size_t k = i + 1; k < sb.size(); ++k) {
      Parity e = sb[i].eps + sb[k].eps + q.eta;
      g.num.push_back(gamma_r_factor(sb[i].s + sb[k].s + CRat(e.value()), "sign-pair"));
    }
  for (std::size_t j = 0; j < db.size(); ++j)
    for (std::size_t l = j + 1; l < db.size(); ++l) {
      CRat x = db[j].s + db[l].s;
      g.num.push_back(gamma_c_factor(x + half_int(db[j].k + db[l].k - 2), "ds-pair"));
      g.num.push_back(gamma_c_factor(x + half_int(std::abs(db[j].k - db[l].k)), "ds-pair"));
    }
  g.canonicalize();
  return g;
}

GammaExpr script_g(const EmbeddingParams& e, Parity eta) {
  GammaExpr g;
  std::size_t m = e.size();
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; i + j <= m; ++j)
      g.num.push_back(g_factor(e.delta[i - 1] + e.delta[j - 1] + eta, -e.lambda[i - 1] - e.lambda[j - 1],
                               "(" + std::to_string(i) + "," + std::to_string(j) + ")"));
  g.canonicalize();
  return g;
}

GammaExpr script_g_tilde(const EmbeddingParams& e, Parity eta) {
  GammaExpr g;
  std::size_t m = e.size();
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      if (i + j > m + 1)
        g.num.push_back(g_factor(e.delta[i - 1] + e.delta[j - 1] + eta, e.lambda[i - 1] + e.lambda[j - 1],
                                 "(" + std::to_string(i) + "," + std::to_string(j) + ")"));
  g.canonicalize();
  return g;
}

GammaExpr full_g_product(const EmbeddingParams& e, Parity eta) {
  GammaExpr g;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      g.num.push_back(g_factor(e.delta[i] + e.delta[j] + eta, -e.lambda[i] - e.lambda[j]));
  g.canonicalize();
  return g;
}

int omega_power(const ReprData& r) {
  ReprData q = normalized(r);
  long p = 0;
  const auto& sb = q.sign_blocks;
  for (std::size_t i = 0; i < sb.size(); ++i)
    for (std::size_t k = i + 1; k < sb.size(); ++k) p -= (sb[i].eps + sb[k].eps + q.eta).value();
  std::vector<int> ks;
  for (auto& b : q.ds_blocks) ks.push_back(b.k);
  std::stable_sort(ks.begin(), ks.end(), std::greater<>());
  long m = q.size();
  for (std::size_t j = 1; j <= ks.size(); ++j)
    p += ks[j - 1] * (2 * static_cast<long>(j) - m) - Parity(ks[j - 1] + q.eta.value()).value();
  return static_cast<int>(((p % 4) + 4) % 4);
}

FeCheck fe_ratio_check(const ReprData& r, Complex s, double tol) {
  GammaExpr num = l_inf(r);
  GammaExpr den = l_inf(dual(r));
  GammaExpr prod = full_g_product(casselman_embedding(r), r.eta);
  auto near_pole = [&](Complex z) {
    return std::min({num.pole_distance(z), den.pole_distance(1.0 - z), prod.pole_distance(z)}) < 1e-6;
  };
  if (near_pole(s)) throw PoleProximity("evaluation point within 1e-6 of a Gamma pole");
  auto ratio = [&](Complex z) { return num.eval(z) / den.eval(1.0 - z); };

  FeCheck c;
  GammaExpr unit;
  unit.i_power = omega_power(r);
  c.formula_omega = unit.constant();
  c.lhs = ratio(s);
  Complex p = prod.eval(s);
  c.rhs = c.formula_omega * p;
  c.rel_error = std::abs(c.lhs - c.rhs) / std::abs(c.lhs);
  c.twisted = r.eta.value() != 0;
  if (!c.twisted) {
    c.omega = c.formula_omega;
    c.passed = c.rel_error <= tol;
    return c;
  }
  c.omega = c.lhs / p;
  c.unit_error = std::abs(c.omega * c.omega * c.omega * c.omega - 1.0);
  static const Complex offsets[] = {{0.25, 0.125}, {0.375, -0.25}, {-0.125, 0.3125}, {0.1875, 0.5}};
  c.drift = INFINITY;
  for (Complex d : offsets) {
    Complex s2 = s + d;
    if (near_pole(s2)) continue;
    c.drift = std::abs(ratio(s2) / prod.eval(s2) - c.omega);
    break;
  }
  c.passed = c.unit_error <= tol && c.drift <= tol;
  return c;
}

PoleList pole_enumeration(const ReprData& r) {
  GammaExpr g = l_inf(r);
  std::vector<PoleEntry> raw;
  for (auto& pt : g.singular_points(kHalf, std::nullopt))
    for (auto& f : g.num)
      if (f.order_at(pt) > 0) raw.push_back({pt, 1, f.origin});
  return aggregate(raw);
}

PoleList pole_families(const ReprData& r) {
  require_valid(r);
  ReprData q = normalized(r);
  const auto& sb = q.sign_blocks;
  const auto& db = q.ds_blocks;
  std::vector<PoleEntry> raw;
  for (std::size_t j = 0; j < db.size() / 2; ++j) {
    Rat x = -db[j].s.re;
    if (kQuarter <= x && x < kHalf && Parity(db[j].k) == q.eta)
      raw.push_back({CRat(-2) * db[j].s, 1, "ds-self"});
  }
  for (std::size_t i = 0; i < sb.size() / 2; ++i)
    for (std::size_t k = i + 1; k < sb.size() / 2; ++k) {
      Rat x = -sb[i].s.re - sb[k].s.re;
      if (kHalf <= x && x < Rat(1) && sb[i].eps + sb[k].eps == q.eta)
        raw.push_back({-sb[i].s - sb[k].s, 1, "sign-pair"});
    }
  for (std::size_t j = 0; j < db.size() / 2; ++j)
    for (std::size_t l = j + 1; l < db.size() / 2; ++l) {
      Rat x = -db[j].s.re - db[l].s.re;
      if (kHalf <= x && x < Rat(1) && db[j].k == db[l].k)
        raw.push_back({-db[j].s - db[l].s, 1, "ds-pair"});
    }
  return aggregate(raw);
}

std::array<GammaExpr, 6> partial_products(const ReprData& r) {
  EmbeddingParams e = casselman_embedding(r);
  std::size_t h = r.r1() / 2, r2 = r.r2(), m = e.size();
  auto block = [&](std::size_t p) -> long {  // 0: first 1-blocks, -1: last 1-blocks, else 2-block index
    if (p <= h) return 0;
    if (p > h + 2 * r2) return -1;
    return static_cast<long>((p - h - 1) / 2 + 1);
  };
  std::array<GammaExpr, 6> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; i + j <= m; ++j) {
      long a = block(i), b = block(j);
      std::size_t set;
      if (a == 0 && b == 0) set = 0;
      else if (a == 0 && b == -1) set = 1;
      else if (a == 0) set = 2;
      else if (a > 0 && b > 0 && a == b) set = 3;
      else if (a > 0 && b > 0 && a + b == static_cast<long>(r2) + 1) set = 4;
      else if (a > 0 && b > 0) set = 5;
      else throw std::logic_error("pair outside the six partial products");
      out[set].num.push_back(g_factor(e.delta[i - 1] + e.delta[j - 1] + r.eta, -e.lambda[i - 1] - e.lambda[j - 1],
                                      "(" + std::to_string(i) + "," + std::to_string(j) + ")"));
    }
  for (auto& g : out) g.canonicalize();
  return out;
}

std::array<GammaExpr, 6> partial_closed_forms(const ReprData& r) {
  require_valid(r);
  ReprData q = normalized(r);
  const auto& sb = q.sign_blocks;
  const auto& db = q.ds_blocks;
  std::size_t h = sb.size() / 2, r1 = sb.size(), r2 = db.size();
  Parity eta = q.eta;
  std::array<GammaExpr, 6> out;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) {
      out[0].num.push_back(g_factor(sb[i].eps + sb[j].eps + eta, sb[i].s + sb[j].s));
      // s_{r1+1-j} in 1-based numbering
      const auto& t = sb[r1 - 1 - j];
      out[1].num.push_back(g_factor(sb[i].eps + t.eps + eta, sb[i].s + t.s));
    }
  for (std::size_t i = 0; i < h; ++i)
    for (auto& b : db) {
      out[2] *= gamma_c_ratio(sb[i].s + b.s, half_int(b.k - 1));
      out[2].i_power += b.k;
    }
  for (std::size_t l = 0; l < r2 / 2; ++l) {
    out[3].num.push_back(g_factor(Parity(db[l].k) + eta, CRat(2) * db[l].s));
    out[4].num.push_back(g_factor(eta, db[l].s + db[r2 - 1 - l].s + CRat(db[l].k - 1)));
  }
  for (std::size_t a = 0; a < r2; ++a)
    for (std::size_t b = a + 1; a + b + 2 <= r2; ++b) {
      CRat x = db[a].s + db[b].s;
      int k1 = db[a].k, k2 = db[b].k;
      out[5] *= gamma_c_ratio(x, half_int(k1 + k2 - 2));
      out[5] *= gamma_c_ratio(x, half_int(std::abs(k1 - k2)));
      out[5].i_power += 2 * std::max(k1, k2);
    }
  for (auto& g : out) g.canonicalize();
  return out;
}

HolomorphyReport holomorphy_check(const ReprData& r) {
  HolomorphyReport rep;
  GammaExpr l = l_inf(r);
  GammaExpr g = script_g(casselman_embedding(r), r.eta);
  auto parts = partial_products(r);

  GammaExpr all;
  for (auto& p : parts) all *= p;
  if (!(all == g)) rep.failures.push_back("partial products do not multiply to script_g");

  if (!l.den.empty()) rep.failures.push_back("l_inf has a denominator");
  for (auto& pt : l.singular_points(Rat(1), std::nullopt))
    if (l.order_at(pt) > 0) rep.failures.push_back("l_inf has a pole at " + pt.str() + " with Re s >= 1");

  std::map<std::pair<Rat, Rat>, int> poles;
  for (auto& e : pole_enumeration(r)) poles[{e.location.re, e.location.im}] += e.order;
  for (auto& [key, order] : poles) {
    CRat pt(key.first, key.second);
    ++rep.poles_checked;
    int og = g.order_at(pt);
    if (og < order)
      rep.failures.push_back("pole of order " + std::to_string(order) + " at " + pt.str() +
                             " but script_g has order " + std::to_string(og));
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k].order_at(pt) < 0)
        rep.failures.push_back("partial product " + std::to_string(k + 1) + " vanishes at pole " + pt.str());
  }

  for (std::size_t k = 0; k < parts.size(); ++k)
    for (auto& pt : parts[k].singular_points(kHalf, Rat(1))) {
      ++rep.zeros_checked;
      if (parts[k].order_at(pt) < 0)
        rep.failures.push_back("partial product " + std::to_string(k + 1) + " vanishes at " + pt.str());
    }
  return rep;
}

}  // namespace extsq::lfactor
