#include "doctest.h"

#include <random>

#include "bsconf/basen.hpp"
#include "bsconf/errors.hpp"
#include "support/oracles.hpp"

using namespace bsconf;
using oracle::BigInt;
using oracle::Rational;

TEST_CASE("from_fraction: 1/n is 0.1") {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    auto x = NAryNumber::from_fraction(1, n, n);
    CHECK(x.to_string() == "0.1");
    CHECK(oracle::value(x) == Rational(1, n));
  }
}

TEST_CASE("from_fraction: zero") {
  auto x = NAryNumber::from_fraction(0, 7, 10);
  CHECK(x.is_zero());
  CHECK(x.sign() == 0);
  CHECK(x.terms().empty());
  CHECK(x.to_string() == "0");
}

TEST_CASE("from_fraction: n + 1/n + 1/n^4 = 10.1001") {
  for (std::uint32_t n = 2; n <= 10; ++n) {
    BigInt n4 = oracle::big_pow(n, 4);
    auto   x  = NAryNumber::from_fraction(oracle::big_pow(n, 5) + oracle::big_pow(n, 3) + 1, n4, n);
    CHECK(x.to_string() == "10.1001");
  }
}

TEST_CASE("from_fraction: unsupported denominators") {
  CHECK_THROWS_AS(NAryNumber::from_fraction(1, 3, 10), DenominatorNotSupported);
  CHECK_THROWS_AS(NAryNumber::from_fraction(1, 7, 12), DenominatorNotSupported);
  CHECK_THROWS_AS(NAryNumber::from_fraction(1, 0, 10), DenominatorNotSupported);
  CHECK_NOTHROW(NAryNumber::from_fraction(3, 9, 12));  // 1/3 = 4/12
  CHECK_THROWS_AS(NAryNumber::from_fraction(1, 2, 1), InvalidBase);
}

TEST_CASE("add: identities and a rational oracle") {
  auto x = NAryNumber::parse("-37.0402", 10);
  CHECK(add(x, NAryNumber(10)) == x);
  CHECK(add(x, -x).is_zero());
  auto half = NAryNumber::from_fraction(1, 2, 10);
  auto one  = half + half;
  CHECK(oracle::value(one) == Rational(1));
  CHECK(one.to_string() == "1");
}

TEST_CASE("add: base mismatch") {
  CHECK_THROWS_AS(add(NAryNumber::from_integer(1, 10), NAryNumber::from_integer(1, 6)),
                  BaseMismatch);
}

TEST_CASE("shift: examples") {
  auto x = NAryNumber::parse("21.021311", 10);
  CHECK(shift(x, 1).to_string() == "210.21311");
  CHECK(shift(x, 0) == x);
  CHECK(shift(shift(x, 3), -3) == x);
}

TEST_CASE("frac_profile: examples") {
  auto x = NAryNumber::parse("21.021311", 10);
  CHECK(x.frac_profile() == FracProfile{-6, 1});
  CHECK(NAryNumber::from_integer(5, 10).frac_profile() == FracProfile{0, 5});
  CHECK(NAryNumber::from_integer(50, 10).frac_profile() == FracProfile{0, 0});
  auto y = NAryNumber::from_fraction(3, 10, 10);
  CHECK(y.frac_profile() == FracProfile{-1, 3});
  CHECK(NAryNumber::parse("0.30", 10) == y);
  CHECK(NAryNumber(10).frac_profile() == FracProfile{0, 0});
}

TEST_CASE("to_fraction: exponent is -p(x)") {
  auto x = NAryNumber::parse("10.1001", 10);
  auto f = x.to_fraction();
  CHECK(f.exponent == 4);
  CHECK(f.numerator == 101001);
  auto z = NAryNumber(7).to_fraction();
  CHECK(z.numerator == 0);
  CHECK(z.exponent == 0);
  auto m = NAryNumber::parse("-0.03", 10).to_fraction();
  CHECK(m.numerator == -3);
  CHECK(m.exponent == 2);
}

TEST_CASE("text format") {
  CHECK(NAryNumber::parse("1:12:7.3", 13).to_string() == "1:12:7.3");
  CHECK(oracle::value(NAryNumber::parse("1:12:7.3", 13)) == Rational(1 * 169 + 12 * 13 + 7) + Rational(3, 13));
  CHECK(NAryNumber::parse("-10.1001", 2).to_string() == "-10.1001");
  CHECK(NAryNumber::parse("\xE2\x88\x92" "10.1", 10).to_string() == "-10.1");
  CHECK(NAryNumber::parse("+007.500", 10).to_string() == "7.5");
  CHECK(NAryNumber::parse("-0", 10).is_zero());
  CHECK(NAryNumber::parse(".5", 10).to_string() == "0.5");
  CHECK_THROWS_AS(NAryNumber::parse("12", 2), ParseError);
  CHECK_THROWS_AS(NAryNumber::parse("1.2.3", 10), ParseError);
  CHECK_THROWS_AS(NAryNumber::parse("", 10), ParseError);
  CHECK_THROWS_AS(NAryNumber::parse("1:13", 13), ParseError);
  CHECK_THROWS_AS(NAryNumber::parse("abc", 10), ParseError);
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(11);
  for (std::uint32_t n : {2u, 3u, 6u, 10u, 12u, 13u, 36u}) {
    for (int t = 0; t < 300; ++t) {
      auto x = oracle::random_number(rng, n, 1000000, 6);
      CHECK(NAryNumber::parse(x.to_string(), n) == x);
    }
  }
}

TEST_CASE("property: from_fraction / to_fraction round trip") {
  std::mt19937_64 rng(1);
  for (std::uint32_t n : {2u, 6u, 10u, 12u, 30u}) {
    auto                               fs = oracle::factor(n);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<int>  ex(0, 6);
    for (int t = 0; t < 2000; ++t) {
      // q is a random divisor of n^6
      BigInt q = 1;
      for (auto const& f : fs) {
        q *= oracle::big_pow(f.p, ex(rng) * f.e);
      }
      BigInt p = num(rng);
      auto   x = NAryNumber::from_fraction(p, q, n);
      auto   f = x.to_fraction();
      CHECK(Rational(f.numerator, oracle::big_pow(n, f.exponent)) == Rational(p, q));
      CHECK(oracle::value(x) == Rational(p, q));
      CHECK(f.exponent == -x.frac_profile().place);
    }
  }
}

TEST_CASE("property: add and sub are homomorphisms onto Z[1/n]") {
  std::mt19937_64 rng(2);
  for (std::uint32_t n : {2u, 6u, 10u, 12u}) {
    for (int t = 0; t < 2500; ++t) {
      auto x = oracle::random_number(rng, n, 1000000, 7);
      auto y = oracle::random_number(rng, n, 1000000, 7);
      CHECK(oracle::value(add(x, y)) == oracle::value(x) + oracle::value(y));
      CHECK(oracle::value(sub(x, y)) == oracle::value(x) - oracle::value(y));
      CHECK((add(x, y) == add(y, x)));
    }
  }
}

TEST_CASE("property: canonical digits") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 15);
    auto          x = oracle::random_number(rng, n, 100000, 5) + oracle::random_number(rng, n, 100000, 5);
    CHECK((x.sign() == 0) == x.terms().empty());
    int prev = -1000000;
    for (auto const& term : x.terms()) {
      CHECK(term.digit >= 1);
      CHECK(term.digit <= n - 1);
      CHECK(term.index > prev);
      prev = term.index;
    }
  }
}

TEST_CASE("property: shift multiplies by n^j") {
  std::mt19937_64 rng(4);
  for (std::uint32_t n : {2u, 7u, 12u}) {
    for (int t = 0; t < 500; ++t) {
      auto x = oracle::random_number(rng, n, 100000, 5);
      int  j = static_cast<int>(rng() % 13) - 6;
      Rational expect = oracle::value(x);
      for (int i = 0; i < std::abs(j); ++i) {
        expect = j > 0 ? Rational(expect * n) : Rational(expect / n);
      }
      CHECK(oracle::value(shift(x, j)) == expect);
      if (!x.is_zero()) {
        CHECK(shift(x, j).frac_profile().place == std::min(0, x.min_index() + j));
      }
    }
  }
}

TEST_CASE("ordering and hashing follow value") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    auto x = oracle::random_number(rng, 6, 5000, 3);
    auto y = oracle::random_number(rng, 6, 5000, 3);
    auto vx = oracle::value(x);
    auto vy = oracle::value(y);
    CHECK(((x <=> y) < 0) == (vx < vy));
    CHECK((x == y) == (vx == vy));
    if (x == y) {
      CHECK(x.hash() == y.hash());
    }
  }
}
