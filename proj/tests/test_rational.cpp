#include <catch2/catch_amalgamated.hpp>

#include <symtop/linalg.hpp>
#include <symtop/rational.hpp>
#include <symtop/rng.hpp>

using namespace symtop;

TEST_CASE("rational normalization and basic arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));

  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("rational ordering, floor and ceil") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational parse and print round trip") {
  CHECK(Rational::try_parse("3/4") == Rational(3, 4));
  CHECK(Rational::try_parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::try_parse("5") == Rational(5));
  CHECK(Rational::try_parse("-0") == Rational(0));
  CHECK(!Rational::try_parse(""));
  CHECK(!Rational::try_parse("1/"));
  CHECK(!Rational::try_parse("/2"));
  CHECK(!Rational::try_parse("a"));
  CHECK(!Rational::try_parse("1/0"));
  CHECK(!Rational::try_parse("1.5"));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");

  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational r(rng.range(-1000, 1000), rng.range(1, 1000));
    CHECK(Rational::try_parse(r.str()) == r);
  }
}

TEST_CASE("rational field identities on random values") {
  SplitMix64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Rational a(rng.range(-50, 50), rng.range(1, 30));
    Rational b(rng.range(-50, 50), rng.range(1, 30));
    Rational c(rng.range(-50, 50), rng.range(1, 30));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational overflow is detected") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("vector parsing and printing") {
  auto v = try_parse_vec("2,1");
  REQUIRE(v);
  CHECK(*v == RatVec({Rational(2), Rational(1)}));
  CHECK(vec_str(*v) == "2,1");
  auto w = try_parse_vec("1/2,-3/4,0");
  REQUIRE(w);
  CHECK(vec_str(*w) == "1/2,-3/4,0");
  CHECK(!try_parse_vec(""));
  CHECK(!try_parse_vec("1,,2"));
  CHECK(!try_parse_vec("1,x"));
}

TEST_CASE("matrix inverse and solve") {
  RatMat m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(1, 2);
  m.at(1, 0) = Rational(0);
  m.at(1, 1) = Rational(1, 2);
  CHECK(det(m) == Rational(1, 2));
  RatMat mi = inverse(m);
  CHECK(mul(m, mi) == RatMat::identity(2));
  RatVec b = {Rational(2), Rational(1)};
  RatVec x = solve(m, b);
  CHECK(matvec(m, x) == b);

  RatMat sing(2, 2);
  sing.at(0, 0) = Rational(1);
  sing.at(0, 1) = Rational(2);
  sing.at(1, 0) = Rational(2);
  sing.at(1, 1) = Rational(4);
  CHECK(det(sing) == Rational(0));
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("random matrices invert exactly") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    RatMat m(3, 3);
    for (auto& e : m.a) e = Rational(rng.range(-6, 6), rng.range(1, 4));
    if (det(m).is_zero()) continue;
    CHECK(mul(m, inverse(m)) == RatMat::identity(3));
  }
}
