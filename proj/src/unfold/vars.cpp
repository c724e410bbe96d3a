#include "extsq/unfold/vars.hpp"

#include <cstdio>
#include <set>

namespace extsq::unfold {

using algebra::indexed_name;
using algebra::Vars;

namespace {

std::string key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

Rat value_of(const nlohmann::json& e) {
  if (e.is_string()) return Rat::parse(e.get<std::string>());
  if (e.is_number_integer()) return Rat(e.get<long>());
  if (e.is_number()) return Rat::parse(e.dump());
  throw ParseError("unfold coordinate must be a rational string or number");
}

// Reads a {"i,j": value} table; every listed index must be wanted exactly once.
std::map<std::pair<int, int>, Rat> read_table(const nlohmann::json& t, const std::set<std::pair<int, int>>& wanted,
                                              const std::string& what) {
  if (!t.is_object()) throw ParseError("'" + what + "' must be an object");
  std::map<std::pair<int, int>, Rat> out;
  for (auto& [k, e] : t.items()) {
    int i = 0, j = 0;
    char comma = 0;
    std::size_t used = 0;
    if (std::sscanf(k.c_str(), "%d%c%d%zn", &i, &comma, &j, &used) != 3 || comma != ',' || used != k.size() ||
        !wanted.count({i, j}))
      throw ParseError("bad " + what + " index '" + k + "'");
    Rat v = value_of(e);
    if (v.is_zero()) throw DomainError(what + "(" + k + ") must be nonzero");
    out[{i, j}] = v;
  }
  if (out.size() != wanted.size()) throw ParseError("'" + what + "' is missing entries");
  return out;
}

}  // namespace

UnfoldVars<RatFunc> symbolic_cz(int n) {
  UnfoldVars<RatFunc> v(n);
  for (int r = 1; r < n; ++r)
    for (int i = 1; i <= r; ++i) {
      v.c(r, i) = RatFunc::var(indexed_name("c", static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
      v.z(r, i) = RatFunc::var(indexed_name("z", static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
    }
  return v;
}

UnfoldVars<RatFunc> symbolic_x(int n) {
  return UnfoldVars<RatFunc>::from_x(n, [](int i, int j) {
    return RatFunc::var(indexed_name("x", static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  });
}

UnfoldVars<Rat> random_x(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 6), den(1, 4), sign(0, 1);
  return UnfoldVars<Rat>::from_x(n, [&](int, int) {
    long p = num(rng), q = den(rng);
    return Rat(mpz_class(sign(rng) ? -p : p), mpz_class(q));
  });
}

std::map<algebra::VarId, Rat> x_point(const UnfoldVars<Rat>& v) {
  std::map<algebra::VarId, Rat> pt;
  for (int i = 1; i < v.n(); ++i)
    for (int j = 2 * i; j < 2 * v.n(); ++j)
      pt[Vars::intern(indexed_name("x", static_cast<std::size_t>(i), static_cast<std::size_t>(j)))] = v.x(i, j);
  return pt;
}

UnfoldVars<Rat> vars_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw ParseError("unfold vars need integer 'n'");
  int n = j["n"].get<int>();
  if (n < 1 || n > 64) throw DomainError("unfold size n out of range");
  bool cz = j.contains("c") || j.contains("z"), xs = j.contains("x");
  if (cz == xs) throw ParseError("unfold vars need either 'c' and 'z' or 'x'");
  if (xs) {
    std::set<std::pair<int, int>> wanted;
    for (int i = 1; i < n; ++i)
      for (int k = 2 * i; k < 2 * n; ++k) wanted.insert({i, k});
    auto t = read_table(j["x"], wanted, "x");
    return UnfoldVars<Rat>::from_x(n, [&](int i, int k) { return t.at({i, k}); });
  }
  if (!j.contains("c") || !j.contains("z")) throw ParseError("unfold vars need both 'c' and 'z'");
  std::set<std::pair<int, int>> wanted;
  for (int r = 1; r < n; ++r)
    for (int i = 1; i <= r; ++i) wanted.insert({r, i});
  auto c = read_table(j["c"], wanted, "c"), z = read_table(j["z"], wanted, "z");
  UnfoldVars<Rat> v(n);
  for (auto& [ri, val] : c) v.c(ri.first, ri.second) = val;
  for (auto& [ri, val] : z) v.z(ri.first, ri.second) = val;
  return v;
}

nlohmann::json vars_to_json(const UnfoldVars<Rat>& v) {
  nlohmann::json c = nlohmann::json::object(), z = nlohmann::json::object();
  for (int r = 1; r < v.n(); ++r)
    for (int i = 1; i <= r; ++i) {
      c[key(r, i)] = v.c(r, i).str();
      z[key(r, i)] = v.z(r, i).str();
    }
  return {{"n", v.n()}, {"c", c}, {"z", z}};
}

}  // namespace extsq::unfold
