#include "twc/weil.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace twc;

namespace {

// Small random self-dual-or-not parameters for property checks.
LanglandsParam random_real_param(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4), kind(0, 1), eps(0, 1);
  std::uniform_int_distribution<long long> twice_s(-6, 6), gap(1, 4);
  std::vector<WeilIrrep> blocks;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Rat s(twice_s(rng), 2);
    if (kind(rng) == 0)
      blocks.push_back(WBlock(s, eps(rng)));
    else
      blocks.push_back(VBlock(s, s + Rat(gap(rng))));
  }
  return LanglandsParam(Flavor::Real, std::move(blocks));
}

}  // namespace

TEST_CASE("block invariants") {
  CHECK_THROWS_AS(VBlock(Rat(1), Rat(1)), input_error);
  CHECK_THROWS_AS(VBlock(Rat(2), Rat(1)), input_error);
  CHECK_THROWS_AS(VBlock(Rat(0), Rat(1, 2)), input_error);
  CHECK_THROWS_AS(ChiBlock(Rat(0), Rat(1, 2)), input_error);
  CHECK_THROWS_AS(WBlock(Rat(0), 2), input_error);
  CHECK_NOTHROW(VBlock(Rat(-3, 2), Rat(3, 2)));
  CHECK_NOTHROW(ChiBlock(Rat(-1), Rat(1)));
}

TEST_CASE("normalize_two_dim") {
  CHECK(normalize_two_dim(Rat(3, 2), Rat(-3, 2)) == WeilIrrep(VBlock(Rat(-3, 2), Rat(3, 2))));
  CHECK(normalize_two_dim(Rat(-2), Rat(1)) == WeilIrrep(VBlock(Rat(-2), Rat(1))));
  CHECK_THROWS_AS(normalize_two_dim(Rat(0), Rat(0)), input_error);
}

TEST_CASE("parameter construction") {
  CHECK_THROWS_AS(LanglandsParam(Flavor::Real, {ChiBlock(Rat(0), Rat(0))}), input_error);
  CHECK_THROWS_AS(
      LanglandsParam(Flavor::Complex, {WeilIrrep(WBlock(Rat(0), 0)), ChiBlock(Rat(0), Rat(0))}),
      input_error);
  LanglandsParam p(Flavor::Real, {VBlock(Rat(-1), Rat(2)), WBlock(Rat(0), 1)});
  CHECK(p.dim() == 3);
  // canonical order puts the one-dimensional block first
  CHECK(std::holds_alternative<WBlock>(p.blocks[0]));

  CHECK_THROWS_AS(ArthurBlock(WBlock(Rat(1), 0), 2), input_error);
  CHECK_THROWS_AS(ArthurBlock(VBlock(Rat(-1), Rat(2)), 2), input_error);
  CHECK_THROWS_AS(ArthurBlock(ChiBlock(Rat(-1), Rat(2)), 2), input_error);
  CHECK_NOTHROW(ArthurBlock(VBlock(Rat(-3, 2), Rat(3, 2)), 2));
  CHECK_THROWS_AS(ArthurBlock(WBlock(Rat(0), 0), 0), input_error);
}

TEST_CASE("phi_of_psi ladder expansion") {
  ArthurParam one(Flavor::Real, {ArthurBlock(VBlock(Rat(-3, 2), Rat(3, 2)), 1)});
  CHECK(phi_of_psi(one) ==
        LanglandsParam(Flavor::Real, {VBlock(Rat(-3, 2), Rat(3, 2))}));

  ArthurParam two(Flavor::Real, {ArthurBlock(VBlock(Rat(-3, 2), Rat(3, 2)), 2)});
  CHECK(phi_of_psi(two) ==
        LanglandsParam(Flavor::Real, {VBlock(Rat(-2), Rat(1)), VBlock(Rat(-1), Rat(2))}));

  ArthurParam w3(Flavor::Real, {ArthurBlock(WBlock(Rat(0), 0), 3)});
  CHECK(phi_of_psi(w3) == LanglandsParam(Flavor::Real, {WBlock(Rat(1), 0), WBlock(Rat(0), 0),
                                                        WBlock(Rat(-1), 0)}));

  ArthurParam chi(Flavor::Complex, {ArthurBlock(ChiBlock(Rat(-1), Rat(1)), 2)});
  CHECK(phi_of_psi(chi) ==
        LanglandsParam(Flavor::Complex,
                       {ChiBlock(Rat(-3, 2), Rat(1, 2)), ChiBlock(Rat(-1, 2), Rat(3, 2))}));
}

TEST_CASE("phi_of_psi preserves dimension and matches the ladder character") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> a(1, 5);
    std::uniform_int_distribution<long long> pv(1, 9);
    int n = a(rng);
    long long p = pv(rng);
    ArthurParam psi(Flavor::Real, {ArthurBlock(VBlock(Rat(-p, 2), Rat(p, 2)), n)});
    LanglandsParam phi = phi_of_psi(psi);
    CHECK(phi.dim() == psi.dim());
    // explicit ladder: (+-p - (n-1))/2 + (i-1)
    std::vector<Rat> expect;
    for (int i = 1; i <= n; ++i) {
      expect.push_back(Rat(-p - (n - 1), 2) + Rat(i - 1));
      expect.push_back(Rat(p - (n - 1), 2) + Rat(i - 1));
    }
    std::sort(expect.begin(), expect.end());
    CHECK(infinitesimal_character(phi) == expect);
  }
}

TEST_CASE("infinitesimal character") {
  CHECK(infinitesimal_character(LanglandsParam(Flavor::Real, {WBlock(Rat(0), 0)})) ==
        std::vector<Rat>{Rat(0)});
  LanglandsParam p(Flavor::Real, {VBlock(Rat(-2), Rat(1)), VBlock(Rat(-1), Rat(2))});
  CHECK(infinitesimal_character(p) == std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)});

  ArthurParam speh(Flavor::Real, {ArthurBlock(VBlock(Rat(-3, 2), Rat(3, 2)), 2)});
  CHECK(infinitesimal_character(phi_of_psi(speh)) ==
        std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)});

  CHECK_THROWS_AS(
      infinitesimal_character(LanglandsParam(Flavor::Complex, {ChiBlock(Rat(0), Rat(0))})),
      input_error);
}

TEST_CASE("integral and regular tests") {
  CHECK(is_integral_regular(std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)}) ==
        std::pair<bool, bool>{true, true});
  CHECK(is_integral_regular(std::vector<Rat>{Rat(0), Rat(0)}) ==
        std::pair<bool, bool>{true, false});
  CHECK(is_integral_regular(std::vector<Rat>{Rat(1, 2), Rat(1)}) ==
        std::pair<bool, bool>{false, true});

  using P = std::pair<Rat, Rat>;
  CHECK(is_integral_regular(std::vector<P>{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) ==
        std::pair<bool, bool>{true, true});
  CHECK(is_integral_regular(std::vector<P>{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}) ==
        std::pair<bool, bool>{true, false});
  CHECK(is_integral_regular(std::vector<P>{{Rat(1, 2), Rat(0)}, {Rat(0), Rat(0)}}) ==
        std::pair<bool, bool>{false, false});
}

TEST_CASE("duality") {
  CHECK(dual(LanglandsParam(Flavor::Real, {WBlock(Rat(0), 1)})) ==
        LanglandsParam(Flavor::Real, {WBlock(Rat(0), 1)}));
  CHECK(dual(LanglandsParam(Flavor::Real, {VBlock(Rat(-2), Rat(1))})) ==
        LanglandsParam(Flavor::Real, {VBlock(Rat(-1), Rat(2))}));
  CHECK(dual(LanglandsParam(Flavor::Complex, {ChiBlock(Rat(-1), Rat(1))})) ==
        LanglandsParam(Flavor::Complex, {ChiBlock(Rat(-1), Rat(1))}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LanglandsParam p = random_real_param(rng);
    CHECK(dual(dual(p)) == p);
  }
}

TEST_CASE("self-duality") {
  ArthurParam speh(Flavor::Real, {ArthurBlock(VBlock(Rat(-3, 2), Rat(3, 2)), 2)});
  CHECK(is_selfdual(phi_of_psi(speh)));
  CHECK_FALSE(is_selfdual(LanglandsParam(Flavor::Real, {WBlock(Rat(1), 0)})));
  CHECK(is_selfdual(LanglandsParam(Flavor::Real, {WBlock(Rat(0), 0), WBlock(Rat(0), 1)})));

  // duality fixes the infinitesimal character of self-dual Arthur restrictions
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> a(1, 4);
  std::uniform_int_distribution<long long> pv(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    long long p = pv(rng);
    ArthurParam psi(Flavor::Real, {ArthurBlock(VBlock(Rat(-p, 2), Rat(p, 2)), a(rng))});
    LanglandsParam phi = phi_of_psi(psi);
    CHECK(is_selfdual(phi));
    CHECK(infinitesimal_character(dual(phi)) == infinitesimal_character(phi));
  }
}

TEST_CASE("sign twist") {
  CHECK(twist_by_sign(LanglandsParam(Flavor::Real, {WBlock(Rat(0), 0)})) ==
        LanglandsParam(Flavor::Real, {WBlock(Rat(0), 1)}));
  CHECK(twist_by_sign(LanglandsParam(Flavor::Real, {VBlock(Rat(-2), Rat(1))})) ==
        LanglandsParam(Flavor::Real, {VBlock(Rat(-2), Rat(1))}));
  CHECK_THROWS_AS(
      twist_by_sign(LanglandsParam(Flavor::Complex, {ChiBlock(Rat(-1), Rat(1))})),
      input_error);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    LanglandsParam p = random_real_param(rng);
    CHECK(twist_by_sign(twist_by_sign(p)) == p);
  }

  ArthurParam psi(Flavor::Real, {ArthurBlock(WBlock(Rat(0), 0), 3),
                                 ArthurBlock(VBlock(Rat(-1, 2), Rat(1, 2)), 2)});
  ArthurParam twisted = twist_by_sign(psi);
  CHECK(phi_of_psi(twisted) == twist_by_sign(phi_of_psi(psi)));
}
