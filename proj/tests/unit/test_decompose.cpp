#include <gtest/gtest.h>

#include <random>

#include "extsq/algebra/decompose.hpp"
#include "extsq/algebra/matrix_json.hpp"

using namespace extsq::algebra;

namespace {

Matrix<Rat> rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rat> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = Rat(x);
    ++i;
  }
  return m;
}

Matrix<Rat> random_rational(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Matrix<Rat> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(mpz_class(num(rng)), mpz_class(den(rng)));
  return m;
}

bool trailing_nonzero(const Matrix<Rat>& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (trailing_minor(m, k).is_zero()) return false;
  return true;
}

RatFunc P(const char* s) { return parse_ratfunc(s); }

}  // namespace

TEST(Det, Examples) {
  EXPECT_EQ(det(Matrix<Rat>::identity(3)), Rat(1));
  EXPECT_EQ(det(rat_matrix({{1, 2}, {3, 4}})), Rat(-2));
  EXPECT_EQ(det(generic_matrix(2)).str(), "g11*g22 - g12*g21");
  EXPECT_THROW(det(Matrix<Rat>(2, 3)), extsq::DomainError);
}

TEST(Det, CofactorAndBareissAgree) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto m = random_rational(rng, 6);
    // expand the 6x6 along its first row by hand with 5x5 (Bareiss) minors
    Rat acc(0);
    for (std::size_t k = 0; k < 6; ++k) {
      std::vector<std::size_t> rows{1, 2, 3, 4, 5}, cols;
      for (std::size_t j = 0; j < 6; ++j)
        if (j != k) cols.push_back(j);
      Rat t2 = m(0, k) * det(m.select(rows, cols));
      acc = k % 2 ? acc - t2 : acc + t2;
    }
    EXPECT_EQ(det(m), acc);
  }
}

TEST(Det, Multiplicative) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto a = random_rational(rng, n), b = random_rational(rng, n);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Det, SymbolicGeneric5HasAllPermutationTerms) {
  RatFunc d = det(generic_matrix(5));
  EXPECT_TRUE(d.is_polynomial());
  EXPECT_EQ(d.num().size(), 120u);
}

TEST(Det, ZeroPivotNeedsRowSwap) {
  Matrix<Rat> m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) m(i, (i + 1) % 5) = Rat(static_cast<long>(i + 1));
  // cyclic shift permutation of sign +1 scaled by 5!
  EXPECT_EQ(det(m), Rat(120));
}

TEST(UdlExplicit, Generic2x2) {
  auto g = generic_matrix(2);
  auto f = udl_explicit(g);
  RatFunc d = P("g11*g22 - g12*g21");
  EXPECT_EQ(f.b_plus(0, 0), d);
  EXPECT_EQ(f.b_plus(0, 1), P("g12"));
  EXPECT_EQ(f.b_plus(1, 1), P("g22"));
  EXPECT_TRUE(f.b_plus(1, 0).is_zero());
  EXPECT_EQ(f.a(0, 0), P("g22") * d);
  EXPECT_EQ(f.a(1, 1), P("g22"));
  EXPECT_EQ(f.b_minus(0, 0), d);
  EXPECT_EQ(f.b_minus(1, 0), P("g21"));
  EXPECT_EQ(f.b_minus(1, 1), P("g22"));
  EXPECT_EQ(multiply(f), g);
}

TEST(UdlExplicit, NumericExample) {
  auto f = udl_explicit(rat_matrix({{1, 2}, {3, 4}}));
  EXPECT_EQ(f.a(0, 0), Rat(-8));
  EXPECT_EQ(f.a(1, 1), Rat(4));
  EXPECT_EQ(multiply(f), rat_matrix({{1, 2}, {3, 4}}));
}

TEST(UdlExplicit, Identity) {
  auto f = udl_explicit(Matrix<Rat>::identity(4));
  EXPECT_EQ(f.b_plus, Matrix<Rat>::identity(4));
  EXPECT_EQ(f.a, Matrix<Rat>::identity(4));
  EXPECT_EQ(f.b_minus, Matrix<Rat>::identity(4));
}

TEST(UdlExplicit, DegenerateNamesK) {
  auto g = rat_matrix({{1, 2, 3}, {4, 1, 1}, {5, 1, 1}});
  try {
    udl_explicit(g);
    FAIL();
  } catch (const extsq::DegenerateMinor& e) {
    EXPECT_EQ(e.k(), 2);
  }
  EXPECT_THROW(nhn_decompose(g), extsq::DegenerateMinor);
  EXPECT_THROW(udl_oracle(g), extsq::DegenerateMinor);
  EXPECT_THROW(nhn_decompose(to_ratfunc(g)), extsq::DegenerateMinor);
}

TEST(Nhn, NumericExample) {
  auto f = nhn_decompose(rat_matrix({{1, 2}, {3, 4}}));
  EXPECT_EQ(f.h(0, 0), Rat::parse("-1/2"));
  EXPECT_EQ(f.h(1, 1), Rat(4));
  EXPECT_EQ(f.n(0, 1), Rat::parse("1/2"));
  EXPECT_EQ(f.n_minus(1, 0), Rat::parse("3/4"));
  EXPECT_EQ(multiply(f), rat_matrix({{1, 2}, {3, 4}}));
}

TEST(Nhn, Generic2x2MatchesCorollary) {
  auto g = generic_matrix(2);
  auto f = nhn_decompose(g);
  EXPECT_EQ(f.h(0, 0), P("(g11*g22 - g12*g21)/g22"));
  EXPECT_EQ(f.n(0, 1), P("g12/g22"));
  EXPECT_EQ(multiply(f), g);
}

TEST(Nhn, IdentityIsTrivial) {
  auto f = nhn_decompose(Matrix<Rat>::identity(3));
  EXPECT_EQ(f.n, Matrix<Rat>::identity(3));
  EXPECT_EQ(f.h, Matrix<Rat>::identity(3));
  EXPECT_EQ(f.n_minus, Matrix<Rat>::identity(3));
}

TEST(Nhn, RandomRationalAgreement) {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 50) {
    std::size_t n = 2 + static_cast<std::size_t>(done % 4);
    auto g = random_rational(rng, n);
    if (!trailing_nonzero(g)) continue;
    ++done;
    auto nhn = nhn_decompose(g);
    ASSERT_EQ(multiply(nhn), g);
    ASSERT_TRUE(nhn.n.is_upper() && nhn.n.unit_diagonal());
    ASSERT_TRUE(nhn.n_minus.is_lower() && nhn.n_minus.unit_diagonal());
    auto ex = udl_explicit(g);
    ASSERT_EQ(multiply(ex), g);
    auto orc = udl_oracle(g);
    ASSERT_EQ(multiply(orc), g);
    auto a = to_nhn(ex), b = to_nhn(orc);
    EXPECT_EQ(a.n, nhn.n);
    EXPECT_EQ(a.h, nhn.h);
    EXPECT_EQ(a.n_minus, nhn.n_minus);
    EXPECT_EQ(b.n, nhn.n);
    EXPECT_EQ(b.h, nhn.h);
    EXPECT_EQ(b.n_minus, nhn.n_minus);
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(nhn.h(i - 1, i - 1), corollary_h(g, i));
    for (std::size_t i = 1; i < n; ++i) EXPECT_EQ(nhn.n(i - 1, i), corollary_superdiag(g, i));
  }
}

TEST(Nhn, FieldAndFractionFreePathsAgree) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    auto g = random_rational(rng, 4);
    if (!trailing_nonzero(g)) continue;
    auto a = nhn_decompose(g);
    auto b = nhn_decompose(to_ratfunc(g));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(RatFunc(a.n(i, j)), b.n(i, j));
        EXPECT_EQ(RatFunc(a.h(i, j)), b.h(i, j));
        EXPECT_EQ(RatFunc(a.n_minus(i, j)), b.n_minus(i, j));
      }
    auto o = to_nhn(udl_oracle(to_ratfunc(g)));
    EXPECT_EQ(o.n, b.n);
    EXPECT_EQ(o.h, b.h);
    EXPECT_EQ(o.n_minus, b.n_minus);
  }
}

class GenericSymbolic : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GenericSymbolic, ExplicitOracleAndCorollaryAgree) {
  std::size_t n = GetParam();
  auto g = generic_matrix(n);
  auto ex = udl_explicit(g);
  EXPECT_TRUE(udl_reconstructs(g, ex));
  auto nhn = nhn_decompose(g);
  auto a = to_nhn(ex);
  auto b = to_nhn(udl_oracle(g));
  EXPECT_EQ(a.h, nhn.h);
  EXPECT_EQ(a.n, nhn.n);
  EXPECT_EQ(a.n_minus, nhn.n_minus);
  EXPECT_EQ(b.h, nhn.h);
  EXPECT_EQ(b.n, nhn.n);
  EXPECT_EQ(b.n_minus, nhn.n_minus);
  for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(nhn.h(i - 1, i - 1), corollary_h(g, i));
  for (std::size_t i = 1; i < n; ++i) EXPECT_EQ(nhn.n(i - 1, i), corollary_superdiag(g, i));
}

INSTANTIATE_TEST_SUITE_P(Sizes, GenericSymbolic, ::testing::Values(2, 3, 4, 5));

TEST(UdlExplicit, GenericReconstructsAtRationalPoints) {
  auto g = generic_matrix(4);
  auto f = udl_explicit(g);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  int ok = 0;
  while (ok < 5) {
    std::map<VarId, Rat> pt;
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = 1; j <= 4; ++j)
        pt[Vars::intern(indexed_name("g", i, j))] = Rat(mpz_class(num(rng)), mpz_class(den(rng)));
    auto gv = evaluate(g, pt);
    if (!trailing_nonzero(gv)) continue;
    UDLFactors<Rat> fv{evaluate(f.b_plus, pt), evaluate(f.a, pt), evaluate(f.b_minus, pt)};
    EXPECT_EQ(multiply(fv), gv);
    ++ok;
  }
}
