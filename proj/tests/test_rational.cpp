#include "twc/rational.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using twc::Rat;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(5, 5) == Rat(1));
  CHECK_THROWS_AS(Rat(1, 0), twc::input_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(3, 2) == Rat(-1));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), twc::input_error);
  CHECK(-Rat(3, 2) == Rat(-3, 2));
  CHECK(Rat(-7, 2).abs() == Rat(7, 2));
}

TEST_CASE("ordering and predicates") {
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-1) < Rat(-1, 2));
  CHECK(Rat(3).is_integer());
  CHECK_FALSE(Rat(3, 2).is_integer());
  CHECK(Rat(3, 2).is_half_integer());
  CHECK_FALSE(Rat(1, 3).is_half_integer());
  CHECK(Rat(0).is_zero());
}

TEST_CASE("text form round trip") {
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-3/2") == Rat(-3, 2));
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK_THROWS_AS(Rat::parse("3/0"), twc::input_error);
  CHECK_THROWS_AS(Rat::parse("3/-2"), twc::input_error);
  CHECK_THROWS_AS(Rat::parse("a"), twc::input_error);
  CHECK_THROWS_AS(Rat::parse("1.5"), twc::input_error);

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 12);
  for (int i = 0; i < 200; ++i) {
    Rat r(num(rng), den(rng));
    CHECK(Rat::parse(r.str()) == r);
  }
}
