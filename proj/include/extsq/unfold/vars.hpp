#pragma once

#include <map>
#include <json.hpp>
#include <random>
#include <utility>
#include <vector>

#include "extsq/algebra/matrix.hpp"

namespace extsq::unfold {

using algebra::Matrix;
using algebra::Rat;
using algebra::RatFunc;

// Coordinates of the unfolded integral for GL(2n). The primary data is the
// array y(i, j), 1 <= i < n, 2i <= j <= 2n-1, which holds both families:
//   c(r, i) = y(i, 2r),  z(r, i) = y(i, 2r+1)   for 1 <= i <= r < n,
// and the x-coordinates are the ratios x(i, j) = y(i, j) / y(i, j+1), with
// x(i, 2n-1) = y(i, 2n-1). All indices are 1-based.
template <class T>
class UnfoldVars {
 public:
  UnfoldVars() = default;
  explicit UnfoldVars(int n) : n_(n) {
    if (n < 1) throw DomainError("unfold size n must be positive");
    y_.resize(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) y_[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(2 * n - 2 * i), T(1));
  }

  int n() const { return n_; }
  bool has(int i, int j) const { return i >= 1 && i < n_ && j >= 2 * i && j <= 2 * n_ - 1; }

  const T& y(int i, int j) const {
    check(i, j);
    return y_[idx(i)][static_cast<std::size_t>(j - 2 * i)];
  }
  T& y(int i, int j) {
    check(i, j);
    return y_[idx(i)][static_cast<std::size_t>(j - 2 * i)];
  }
  const T& c(int r, int i) const { return y(i, 2 * r); }
  const T& z(int r, int i) const { return y(i, 2 * r + 1); }
  T& c(int r, int i) { return y(i, 2 * r); }
  T& z(int r, int i) { return y(i, 2 * r + 1); }

  T x(int i, int j) const {
    check(i, j);
    return j == 2 * n_ - 1 ? y(i, j) : y(i, j) / y(i, j + 1);
  }

  // Builds y from x by y(i, j) = prod_{j' >= j} x(i, j').
  template <class F>
  static UnfoldVars from_x(int n, F x_of) {
    UnfoldVars v(n);
    for (int i = 1; i < n; ++i) {
      T acc(1);
      for (int j = 2 * n - 1; j >= 2 * i; --j) {
        acc = acc * x_of(i, j);
        v.y(i, j) = acc;
      }
    }
    return v;
  }

  bool all_nonzero() const {
    for (auto& row : y_)
      for (auto& e : row)
        if (algebra::is_zero(e)) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> UnfoldVars<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    UnfoldVars<std::decay_t<decltype(f(std::declval<const T&>()))>> v(n_);
    for (int i = 1; i < n_; ++i)
      for (int j = 2 * i; j < 2 * n_; ++j) v.y(i, j) = f(y(i, j));
    return v;
  }

 private:
  std::size_t idx(int i) const { return static_cast<std::size_t>(i - 1); }
  void check(int i, int j) const {
    if (!has(i, j))
      throw DomainError("no unfold coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                        ") for n = " + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<std::vector<T>> y_;
};

// c_{r,i} -> "c" r i, z_{r,i} -> "z" r i.
UnfoldVars<RatFunc> symbolic_cz(int n);
// Independent indeterminates x_{i,j}; c and z become monomials in them.
UnfoldVars<RatFunc> symbolic_x(int n);
// Random nonzero rationals for every x_{i,j}.
UnfoldVars<Rat> random_x(int n, std::mt19937_64& rng);

// Substitutes numeric values for the indeterminates of symbolic_x(n).
std::map<algebra::VarId, Rat> x_point(const UnfoldVars<Rat>& v);

// {"n": 3, "c": {"1,1": "2/3", ...}, "z": {...}} or {"n": 3, "x": {"1,2": "1/2", ...}}
UnfoldVars<Rat> vars_from_json(const nlohmann::json& j);
nlohmann::json vars_to_json(const UnfoldVars<Rat>& v);

}  // namespace extsq::unfold
