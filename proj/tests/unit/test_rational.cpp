#include <gtest/gtest.h>

#include "extsq/algebra/rational.hpp"
#include "extsq/common/error.hpp"

using extsq::algebra::Rat;

TEST(Rat, CanonicalForm) {
  Rat r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rat(mpz_class(10), mpz_class(5)).str(), "2");
}

TEST(Rat, ParseForms) {
  EXPECT_EQ(Rat::parse("3/4").str(), "3/4");
  EXPECT_EQ(Rat::parse("-6/8").str(), "-3/4");
  EXPECT_EQ(Rat::parse("17").str(), "17");
  EXPECT_EQ(Rat::parse("0.25").str(), "1/4");
  EXPECT_EQ(Rat::parse("-1.5e-3").str(), "-3/2000");
  EXPECT_EQ(Rat::parse("2E2").str(), "200");
  EXPECT_EQ(Rat::parse(".5").str(), "1/2");
  EXPECT_THROW(Rat::parse("1/0"), extsq::ParseError);
  EXPECT_THROW(Rat::parse("x"), extsq::ParseError);
  EXPECT_THROW(Rat::parse(""), extsq::ParseError);
}

TEST(Rat, Arithmetic) {
  Rat a = Rat::parse("1/3"), b = Rat::parse("1/6");
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ(Rat::parse("-2/3").pow(3).str(), "-8/27");
  EXPECT_EQ(Rat::parse("2/3").pow(-2).str(), "9/4");
  EXPECT_EQ(Rat::parse("-7/2").floor(), -4);
  EXPECT_THROW(a / Rat(0), extsq::DomainError);
  EXPECT_TRUE(a > b);
}
