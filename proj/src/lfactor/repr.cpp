#include "extsq/lfactor/repr.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "extsq/common/error.hpp"

namespace extsq::lfactor {

namespace {

CRat reflect(const CRat& s) { return -s.conj(); }

bool sign_less(const SignBlock& a, const SignBlock& b) {
  if (a.s.re != b.s.re) return a.s.re < b.s.re;
  if (a.eps.value() != b.eps.value()) return a.eps.value() < b.eps.value();
  return a.s.im < b.s.im;
}

bool ds_less(const DsBlock& a, const DsBlock& b) {
  if (a.s.re != b.s.re) return a.s.re < b.s.re;
  if (a.k != b.k) return a.k < b.k;
  return a.s.im < b.s.im;
}

template <class Block, class Less, class Reflect>
bool closed_under_reflection(std::vector<Block> v, Less less, Reflect refl) {
  std::vector<Block> w;
  for (auto& b : v) w.push_back(refl(b));
  std::sort(v.begin(), v.end(), less);
  std::sort(w.begin(), w.end(), less);
  return v == w;
}

std::string block_name(const char* family, std::size_t idx) {
  return std::string(family) + "[" + std::to_string(idx) + "]";
}

CRat shift_from_json(const nlohmann::json& j) {
  if (j.is_string()) return CRat::parse(j.get<std::string>());
  if (j.is_number()) return CRat::parse(j.dump());
  throw ParseError("shift must be a string or a number");
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_field(const nlohmann::json& j, const char* key) {
  auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

bool ValidationReport::has(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::string out;
  for (auto& v : violations) out += (out.empty() ? "" : "; ") + v.condition + ": " + v.detail;
  return out;
}

ValidationReport validate(const ReprData& r) {
  ValidationReport rep;
  auto add = [&](std::string c, std::string d) { rep.violations.push_back({std::move(c), std::move(d)}); };
  if (r.n_half < 1) add("size", "n must be positive");
  if (static_cast<int>(r.r1() + 2 * r.r2()) != r.size())
    add("size", "r1 + 2 r2 = " + std::to_string(r.r1() + 2 * r.r2()) + " but the group is GL(" +
                    std::to_string(r.size()) + ")");
  for (std::size_t j = 0; j < r.r2(); ++j)
    if (r.ds_blocks[j].k < 2) add("weight", block_name("ds", j) + " has k < 2");
  Rat half(mpz_class(1), mpz_class(2));
  for (std::size_t i = 0; i < r.r1(); ++i)
    if (!(r.sign_blocks[i].s.re.abs() < half)) add("strip", block_name("sign", i) + " has |Re s| >= 1/2");
  for (std::size_t j = 0; j < r.r2(); ++j)
    if (!(r.ds_blocks[j].s.re.abs() < half)) add("strip", block_name("ds", j) + " has |Re s| >= 1/2");
  if (r.r1() % 2) add("r1-parity", "r1 = " + std::to_string(r.r1()) + " is odd");

  bool closed = closed_under_reflection(r.sign_blocks, sign_less,
                                        [](SignBlock b) { return SignBlock{b.eps, reflect(b.s)}; });
  if (!closed) add("closure", "sign blocks not closed under s -> -conj(s)");
  bool ds_closed = closed_under_reflection(r.ds_blocks, ds_less,
                                           [](DsBlock b) { return DsBlock{b.k, reflect(b.s)}; });
  if (!ds_closed) add("closure", "discrete-series blocks not closed under s -> -conj(s)");

  if (ds_closed) {
    std::map<int, int> tempered;
    for (auto& b : r.ds_blocks)
      if (b.s.re.is_zero()) ++tempered[b.k];
    int odd = 0;
    for (auto& [k, c] : tempered) odd += c % 2;
    if (odd > 1)
      add("pairing", "weights of blocks with Re s = 0 cannot be arranged with k_j = k_{r2+1-j}");
  }
  return rep;
}

void require_valid(const ReprData& r) {
  auto rep = validate(r);
  if (!rep.ok()) throw PreconditionError("invalid representation data: " + rep.str());
}

ReprData normalized(const ReprData& r) {
  ReprData q = r;
  std::sort(q.sign_blocks.begin(), q.sign_blocks.end(), sign_less);

  std::vector<DsBlock> neg, zero, pos;
  for (auto& b : r.ds_blocks) (b.s.re.sign() < 0 ? neg : b.s.re.is_zero() ? zero : pos).push_back(b);
  std::sort(neg.begin(), neg.end(), ds_less);
  std::sort(zero.begin(), zero.end(), [](const DsBlock& a, const DsBlock& b) {
    return std::tie(a.k, a.s.im) < std::tie(b.k, b.s.im);
  });

  // partners of the negative blocks, mirrored
  std::vector<DsBlock> right;
  for (auto& b : neg) {
    auto it = std::find(pos.begin(), pos.end(), DsBlock{b.k, reflect(b.s)});
    if (it == pos.end()) continue;
    right.push_back(*it);
    pos.erase(it);
  }
  std::sort(pos.begin(), pos.end(), ds_less);

  std::vector<DsBlock> left_mid, mid, right_mid;
  for (std::size_t a = 0; a < zero.size();) {
    std::size_t b = a;
    while (b < zero.size() && zero[b].k == zero[a].k) ++b;
    std::size_t c = b - a;
    for (std::size_t t = 0; t < c / 2; ++t) left_mid.push_back(zero[a + t]);
    if (c % 2) mid.push_back(zero[a + c / 2]);
    for (std::size_t t = c / 2 + c % 2; t < c; ++t) right_mid.push_back(zero[a + t]);
    a = b;
  }

  q.ds_blocks = neg;
  q.ds_blocks.insert(q.ds_blocks.end(), left_mid.begin(), left_mid.end());
  q.ds_blocks.insert(q.ds_blocks.end(), mid.begin(), mid.end());
  q.ds_blocks.insert(q.ds_blocks.end(), right_mid.rbegin(), right_mid.rend());
  q.ds_blocks.insert(q.ds_blocks.end(), right.rbegin(), right.rend());
  q.ds_blocks.insert(q.ds_blocks.end(), pos.begin(), pos.end());
  return q;
}

ReprData dual(const ReprData& r) {
  ReprData d = r;
  for (auto& b : d.sign_blocks) b.s = b.s.conj();
  for (auto& b : d.ds_blocks) b.s = b.s.conj();
  return d;
}

EmbeddingParams casselman_embedding(const ReprData& r) {
  require_valid(r);
  ReprData q = normalized(r);
  EmbeddingParams e;
  std::size_t h = q.r1() / 2;
  auto put_sign = [&](std::size_t i) {
    e.lambda.push_back(-q.sign_blocks[i].s);
    e.delta.push_back(q.sign_blocks[i].eps);
  };
  for (std::size_t i = 0; i < h; ++i) put_sign(i);
  for (auto& b : q.ds_blocks) {
    CRat w(Rat(mpz_class(b.k - 1), mpz_class(2)));
    e.lambda.push_back(-b.s - w);
    e.lambda.push_back(-b.s + w);
    e.delta.push_back(Parity(b.k));
    e.delta.push_back(Parity(0));
  }
  for (std::size_t i = h; i < q.r1(); ++i) put_sign(i);
  return e;
}

EmbeddingParams contragredient(const EmbeddingParams& e) {
  EmbeddingParams t;
  for (std::size_t i = e.size(); i-- > 0;) {
    t.lambda.push_back(-e.lambda[i]);
    t.delta.push_back(e.delta[i]);
  }
  return t;
}

std::vector<Rat> rho(int m) {
  std::vector<Rat> v;
  for (int j = 1; j <= m; ++j) v.emplace_back(mpz_class(m + 1 - 2 * j), mpz_class(2));
  return v;
}

ReprData repr_from_json(const nlohmann::json& j) {
  ReprData r;
  r.n_half = int_field(j, "n");
  r.eta = Parity(j.contains("eta") ? int_field(j, "eta") : 0);
  if (j.contains("sign_blocks"))
    for (auto& b : j.at("sign_blocks")) r.sign_blocks.push_back({Parity(int_field(b, "eps")), shift_from_json(field(b, "s"))});
  if (j.contains("ds_blocks"))
    for (auto& b : j.at("ds_blocks")) r.ds_blocks.push_back({int_field(b, "k"), shift_from_json(field(b, "s"))});
  return r;
}

nlohmann::json repr_to_json(const ReprData& r) {
  nlohmann::json j;
  j["n"] = r.n_half;
  j["eta"] = r.eta.value();
  j["sign_blocks"] = nlohmann::json::array();
  j["ds_blocks"] = nlohmann::json::array();
  for (auto& b : r.sign_blocks) j["sign_blocks"].push_back({{"eps", b.eps.value()}, {"s", b.s.str()}});
  for (auto& b : r.ds_blocks) j["ds_blocks"].push_back({{"k", b.k}, {"s", b.s.str()}});
  return j;
}

ReprData random_repr(std::mt19937_64& rng, int n_half) {
  std::uniform_int_distribution<int> coin(0, 1), re(0, 9), im(-5, 5), weight(2, 6),
      r2dist(0, n_half);
  auto shift = [&] {
    Rat a(mpz_class(-re(rng)), mpz_class(20));
    Rat b = coin(rng) ? Rat(0) : Rat(mpz_class(im(rng)), mpz_class(10));
    return CRat(a, b);
  };
  ReprData r;
  r.n_half = n_half;
  r.eta = Parity(coin(rng));
  int r2 = r2dist(rng);
  int r1 = 2 * (n_half - r2);
  for (int t = 0; t < r1 / 2; ++t) {
    Parity eps(coin(rng));
    CRat s = shift();
    r.sign_blocks.push_back({eps, s});
    r.sign_blocks.push_back({eps, reflect(s)});
  }
  for (int t = 0; t < r2 / 2; ++t) {
    int k = weight(rng);
    CRat s = shift();
    r.ds_blocks.push_back({k, s});
    r.ds_blocks.push_back({k, reflect(s)});
  }
  if (r2 % 2) r.ds_blocks.push_back({weight(rng), CRat(Rat(0), shift().im)});
  std::shuffle(r.sign_blocks.begin(), r.sign_blocks.end(), rng);
  std::shuffle(r.ds_blocks.begin(), r.ds_blocks.end(), rng);
  return r;
}

}  // namespace extsq::lfactor
