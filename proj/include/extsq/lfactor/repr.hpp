#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "extsq/algebra/crat.hpp"
#include "extsq/common/parity.hpp"
#include "extsq/unfold/whittaker.hpp"

namespace extsq::lfactor {

using algebra::CRat;
using algebra::Rat;
using unfold::EmbeddingParams;

// sgn^eps twisted by |det|^s on GL(1)
struct SignBlock {
  Parity eps;
  CRat s;
  bool operator==(const SignBlock&) const = default;
};

// discrete series D_k twisted by |det|^s on GL(2)
struct DsBlock {
  int k = 2;
  CRat s;
  bool operator==(const DsBlock&) const = default;
};

struct ReprData {
  int n_half = 1;  // group is GL(2 n_half)
  std::vector<SignBlock> sign_blocks;
  std::vector<DsBlock> ds_blocks;
  Parity eta;

  std::size_t r1() const { return sign_blocks.size(); }
  std::size_t r2() const { return ds_blocks.size(); }
  int size() const { return 2 * n_half; }
};

struct Violation {
  std::string condition;  // "size", "weight", "closure", "strip", "r1-parity", "pairing"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& condition) const;
  std::string str() const;
};

// Unitarity/genericity conditions on the multiset of blocks, plus the
// hypotheses of the embedding below. Block order is irrelevant here.
ValidationReport validate(const ReprData& r);

// Throws PreconditionError with the report text when validate fails.
void require_valid(const ReprData& r);

// Sorts blocks by real part of the shift. Ties among discrete-series blocks
// are arranged so the weights read the same from both ends.
ReprData normalized(const ReprData& r);

// Shifts s replaced by conj(s): the data of the contragredient.
ReprData dual(const ReprData& r);

// lambda = (-s_1..-s_{r1/2}, [-s-(k-1)/2, -s+(k-1)/2] per 2-block, -s_{r1/2+1}..-s_{r1}),
// delta = (eps.., [k, 0] per 2-block, eps..) on the normalized data.
EmbeddingParams casselman_embedding(const ReprData& r);

// (lambda, delta) -> (-reverse(lambda), reverse(delta))
EmbeddingParams contragredient(const EmbeddingParams& e);

// ((m-1)/2, (m-3)/2, ..., (1-m)/2)
std::vector<Rat> rho(int m);

ReprData repr_from_json(const nlohmann::json& j);
nlohmann::json repr_to_json(const ReprData& r);

// A random valid ReprData for GL(2 n_half). Shifts have real parts in
// (-1/2, 1/2) with denominator 20 and imaginary parts in tenths; blocks come
// out in shuffled order.
ReprData random_repr(std::mt19937_64& rng, int n_half);

}  // namespace extsq::lfactor
