#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "extsq/algebra/decompose.hpp"
#include "extsq/algebra/matrix_json.hpp"
#include "extsq/euler/euler.hpp"
#include "extsq/lfactor/lfactor.hpp"
#include "extsq/special/gamma.hpp"
#include "extsq/special/oscillatory.hpp"
#include "extsq/suite/report.hpp"
#include "extsq/unfold/identities.hpp"
#include "extsq/unfold/shuffle.hpp"
#include "extsq/unfold/whittaker.hpp"

using namespace extsq;
using algebra::CRat;
using algebra::Matrix;
using algebra::Rat;
using algebra::RatFunc;
using suite::RunReport;
using Complex = std::complex<double>;
namespace sf = extsq::special;

namespace {

struct Options {
  std::uint64_t seed = 42;
  bool json = false;
  bool timing = false;
  double tol = 0;  // 0: the command's default
  std::string s = "0.5";
  std::string file;
  int n = 2;
  int trials = 10;
  int samples = 50;
  int delta = 0;
  bool oracle = false;
  long primes = 0;
  std::string repr_file;
};

std::string show(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double tol_or(const Options& o, double fallback) { return o.tol > 0 ? o.tol : fallback; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Complex parse_s(const std::string& text) { return CRat::parse(text).to_complex(); }

nlohmann::json matrix_json(const Matrix<RatFunc>& m) { return algebra::matrix_to_json(m); }

void run_decompose(const Options& o, RunReport& rep) {
  auto g = algebra::matrix_from_json(read_json(o.file));
  if (!g.square()) throw DomainError("matrix must be square");
  auto ex = algebra::udl_explicit(g);
  auto nhn = algebra::nhn_decompose(g);
  auto via_explicit = algebra::to_nhn(ex);
  auto via_oracle = algebra::to_nhn(algebra::udl_oracle(g));
  rep.add("explicit-reconstructs", algebra::udl_reconstructs(g, ex));
  rep.add("explicit-matches-elimination",
          via_explicit.n == nhn.n && via_explicit.h == nhn.h && via_explicit.n_minus == nhn.n_minus);
  rep.add("oracle-matches-elimination", via_oracle.n == nhn.n && via_oracle.h == nhn.h && via_oracle.n_minus == nhn.n_minus);
  bool corollary = true;
  for (std::size_t i = 1; i <= g.rows(); ++i) corollary = corollary && nhn.h(i - 1, i - 1) == algebra::corollary_h(g, i);
  for (std::size_t i = 1; i < g.rows(); ++i) corollary = corollary && nhn.n(i - 1, i) == algebra::corollary_superdiag(g, i);
  rep.add("minor-ratios", corollary);
  rep.result = {{"b_plus", matrix_json(ex.b_plus)}, {"a", matrix_json(ex.a)},     {"b_minus", matrix_json(ex.b_minus)},
                {"n", matrix_json(nhn.n)},          {"h", matrix_json(nhn.h)}, {"n_minus", matrix_json(nhn.n_minus)}};
}

void run_shuffle_verify(const Options& o, RunReport& rep) {
  int n = o.n;
  if (n < 2) throw DomainError("--n must be at least 2");
  auto sig = unfold::sigma(n);
  rep.add("sigma-sign", sig.sign() == unfold::sigma_sign_rule(n), "sign " + std::to_string(sig.sign()));
  if (n <= 3) {
    auto v = unfold::symbolic_cz(n);
    auto b = unfold::build_B(v);
    rep.add("symbolic-determinantal", unfold::determinantal_failures(b, v).empty());
    rep.add("symbolic-block-a", unfold::build_block_A(v) == [&] {
      auto full = unfold::assembled_product(v);
      std::vector<std::size_t> idx;
      for (int k = 0; k < 2 * n - 1; ++k) idx.push_back(static_cast<std::size_t>(k));
      return full.select(idx, idx);
    }());
    rep.add("symbolic-superdiagonal", unfold::superdiag_sum(v) == unfold::superdiag_closed_form(v));
    auto [l, r] = unfold::altsum_check(v, b);
    rep.add("symbolic-alternating-sum", l == r);
    auto vx = unfold::symbolic_x(n);
    rep.add("symbolic-lower-factor", unfold::lower_factor_recursive(vx) == unfold::lower_factor_oracle(unfold::build_B(vx)));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> bit(0, 1), num(-20, 20);
  int det = 0, sup = 0, alt = 0, low = 0, whit = 0;
  double worst = 0, tol = tol_or(o, 1e-10);
  for (int t = 0; t < o.trials; ++t) {
    auto v = unfold::random_x(n, rng);
    auto b = unfold::build_B(v);
    det += unfold::determinantal_failures(b, v).empty();
    sup += unfold::superdiag_sum(v) == unfold::superdiag_closed_form(v);
    auto [l, r] = unfold::altsum_check(v, b);
    alt += l == r;
    low += unfold::lower_factor_recursive(v) == unfold::lower_factor_oracle(b);
    unfold::EmbeddingParams p;
    for (int k = 0; k < 2 * n; ++k) {
      p.lambda.push_back(CRat(Rat(mpz_class(num(rng)), mpz_class(10)), Rat(mpz_class(num(rng)), mpz_class(7))));
      p.delta.push_back(Parity(bit(rng)));
    }
    Complex a = unfold::shuffled_whittaker_oracle(v, p), c = unfold::shuffled_whittaker_closed(v, p);
    double e = std::abs(a - c) / std::abs(a);
    worst = std::max(worst, e);
    whit += e <= tol;
  }
  auto frac = [&](int k) { return std::to_string(k) + "/" + std::to_string(o.trials); };
  rep.add("points-determinantal", det == o.trials, frac(det));
  rep.add("points-superdiagonal", sup == o.trials, frac(sup));
  rep.add("points-alternating-sum", alt == o.trials, frac(alt));
  rep.add("points-lower-factor", low == o.trials, frac(low));
  rep.add("points-whittaker", whit == o.trials, frac(whit) + ", max relative error " + sci(worst));
}

void run_gamma(const Options& o, RunReport& rep) {
  if (o.delta != 0 && o.delta != 1) throw DomainError("--delta must be 0 or 1");
  Parity d(o.delta);
  Complex s = parse_s(o.s);
  Complex closed = sf::g_delta(d, s);
  rep.result = {{"closed", show(closed)}};
  rep.add("closed-form", std::isfinite(closed.real()) && std::isfinite(closed.imag()));
  if (!o.oracle) return;
  sf::CutoffSpec cut;
  cut.parts_count = std::max(2, static_cast<int>(std::floor(s.real())) + 1);
  Complex quad = sf::g_delta_integral(d, s, cut);
  rep.result["quadrature"] = show(quad);
  double tol = tol_or(o, 1e-6);
  double e = std::abs(quad - closed);
  rep.add("quadrature-agrees", e <= tol * std::max(1.0, std::abs(closed)), "difference " + sci(e));
}

lfactor::ReprData load_repr(const std::string& path) {
  auto r = lfactor::repr_from_json(read_json(path));
  lfactor::require_valid(r);
  return r;
}

void run_lfactor(const Options& o, RunReport& rep) {
  auto r = load_repr(o.file);
  Complex s = parse_s(o.s);
  auto g = lfactor::l_inf(r);
  rep.result = {{"factor", g.str()}, {"root_number_power", lfactor::omega_power(r)}};
  try {
    Complex v = g.eval(s);
    rep.result["value"] = show(v);
    rep.add("finite", std::isfinite(std::abs(v)));
  } catch (const PoleError& e) {
    rep.result["value"] = "pole";
    rep.add("finite", false, e.what());
  }
}

void run_poles(const Options& o, RunReport& rep) {
  auto r = load_repr(o.file);
  auto scan = lfactor::pole_enumeration(r);
  rep.add("scan-matches-families", scan == lfactor::pole_families(r));
  auto h = lfactor::holomorphy_check(r);
  rep.add("holomorphy", h.ok(), h.ok() ? std::to_string(h.poles_checked) + " poles matched" : h.failures.front());
  nlohmann::json list = nlohmann::json::array();
  for (auto& p : scan) list.push_back({{"location", p.location.str()}, {"order", p.order}, {"family", p.family}});
  rep.result = {{"poles", list}};
}

void run_fe_check(const Options& o, RunReport& rep) {
  auto r = load_repr(o.file);
  double tol = tol_or(o, 1e-8);
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> re(-1.0, 2.0), im(-3.0, 3.0);
  int done = 0, ok = 0, skipped = 0;
  double worst = 0;
  lfactor::FeCheck last;
  while (done < o.samples) {
    if (skipped > 100 * std::max(1, o.samples)) throw DomainError("no samples away from Gamma poles");
    Complex s(re(rng), im(rng));
    try {
      last = lfactor::fe_ratio_check(r, s, tol);
    } catch (const PoleProximity&) {
      ++skipped;
      continue;
    }
    ++done;
    ok += last.passed;
    worst = std::max(worst, last.twisted ? std::max(last.unit_error, last.drift) : last.rel_error);
  }
  Complex w = last.formula_omega;
  double unit = std::max(std::abs(std::abs(w) - 1.0), std::abs(w * w * w * w - 1.0));
  rep.add("ratio", ok == o.samples,
          std::to_string(ok) + "/" + std::to_string(o.samples) + " within " + sci(tol) + ", worst " + sci(worst));
  rep.add("root-number-unit", unit <= 1e-12);
  rep.result = {{"root_number", show(w)}, {"twisted", last.twisted}};
}

std::vector<euler::SatakeData> load_satake(const Options& o) {
  auto j = read_json(o.file);
  std::vector<euler::SatakeData> data;
  if (j.is_array()) {
    for (auto& e : j) {
      auto d = euler::satake_from_json(e);
      if (o.primes <= 0 || d.p < o.primes) data.push_back(d);
    }
    return data;
  }
  // one object with no "p" is a template used at every prime below --primes
  if (j.is_object() && !j.contains("p")) {
    if (o.primes <= 2) throw DomainError("a Satake template needs --primes above 2");
    auto copy = j;
    copy["p"] = 2;
    auto t = euler::satake_from_json(copy);
    for (long p : euler::primes_below(o.primes)) {
      t.p = p;
      data.push_back(t);
    }
    return data;
  }
  data.push_back(euler::satake_from_json(j));
  return data;
}

void run_euler(const Options& o, RunReport& rep) {
  auto data = load_satake(o);
  Complex s = parse_s(o.s);
  rep.result = {{"primes", data.size()}};
  try {
    Complex v = euler::partial_L(data, s);
    rep.result["partial_L"] = show(v);
    rep.add("convergence-guard", true);
    Complex prod(1.0, 0.0);
    for (auto& d : data) prod *= euler::ext2_factor(d, s);
    double e = data.empty() ? 0.0 : std::abs(v - prod) / std::abs(prod);
    rep.add("multiplicative", e <= tol_or(o, 1e-14), "relative error " + sci(e));
    if (!o.repr_file.empty()) rep.result["lambda"] = show(euler::lambda_assembly(load_repr(o.repr_file), data, s));
  } catch (const euler::ConvergenceGuard& e) {
    rep.add("convergence-guard", false, e.what());
  }
}

void run_suite(const Options& o, RunReport& rep) {
  rep.checks = suite::run_checks(suite::acceptance_checks(), o.seed, suite::thread_cap());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior-square L-function toolkit"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    c->add_flag("--json", o.json, "JSON report");
    c->add_flag("--timing", o.timing, "add wall_time_ms to the report");
    c->add_option("--tol", o.tol, "tolerance override");
  };
  auto file = [&](CLI::App* c, const char* what) { c->add_option("file", o.file, what)->required()->check(CLI::ExistingFile); };

  auto* dec = app.add_subcommand("decompose", "explicit UDL and NHN factors of a matrix");
  file(dec, "matrix JSON");
  auto* shv = app.add_subcommand("shuffle-verify", "unfolding identities, symbolic for n <= 3 and at random points");
  shv->add_option("--n", o.n, "n_half")->capture_default_str();
  shv->add_option("--trials", o.trials, "random points")->capture_default_str();
  auto* gam = app.add_subcommand("gamma", "G_delta(s), optionally against the oscillatory integral");
  gam->add_option("--delta", o.delta)->capture_default_str();
  gam->add_option("--s", o.s)->capture_default_str();
  gam->add_flag("--oracle", o.oracle, "also evaluate by quadrature");
  auto* lf = app.add_subcommand("lfactor", "archimedean exterior-square factor");
  file(lf, "representation JSON");
  lf->add_option("--s", o.s)->capture_default_str();
  auto* pol = app.add_subcommand("poles", "poles in Re s >= 1/2 and the holomorphy check");
  file(pol, "representation JSON");
  auto* fe = app.add_subcommand("fe-check", "functional-equation ratio at random points");
  file(fe, "representation JSON");
  fe->add_option("--samples", o.samples)->capture_default_str();
  auto* eu = app.add_subcommand("euler", "partial exterior-square L-function from Satake data");
  file(eu, "Satake JSON: one object, a list, or a template without \"p\"");
  eu->add_option("--s", o.s)->capture_default_str();
  eu->add_option("--primes", o.primes, "only primes below this bound");
  eu->add_option("--repr", o.repr_file, "representation JSON for the completed product")->check(CLI::ExistingFile);
  auto* su = app.add_subcommand("suite", "every acceptance check");
  for (auto* c : {dec, shv, gam, lf, pol, fe, eu, su}) common(c);

  CLI11_PARSE(app, argc, argv);
  auto* cmd = app.get_subcommands().front();
  RunReport rep;
  rep.command = cmd->get_name();
  rep.seed = o.seed;
  auto start = std::chrono::steady_clock::now();
  try {
    if (cmd == dec) run_decompose(o, rep);
    else if (cmd == shv) run_shuffle_verify(o, rep);
    else if (cmd == gam) run_gamma(o, rep);
    else if (cmd == lf) run_lfactor(o, rep);
    else if (cmd == pol) run_poles(o, rep);
    else if (cmd == fe) run_fe_check(o, rep);
    else if (cmd == eu) run_euler(o, rep);
    else run_suite(o, rep);
  } catch (const DegenerateMinor& e) {
    std::cerr << "error: " << e.what() << " (k = " << e.k() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.timing)
    rep.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (o.json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.text();
  return rep.passed() ? 0 : 1;
}
