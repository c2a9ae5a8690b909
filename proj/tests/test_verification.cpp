#include "cfm/verification.hpp"

#include <doctest.h>

#include "cfm/thue_morse.hpp"
#include "oracles.hpp"

using namespace cfm;
using namespace cfm::testing;

namespace {

Morphism phi3() {
  return Morphism(2, 2, {Word::binary("001"), Word::binary("011")});
}

Morphism doubled01() {
  return Morphism(2, 2, {Word::binary("01"), Word::binary("01")});
}

}  // namespace

TEST_CASE("keranen_check passes the known cubefree morphisms") {
  CHECK(keranen_check(phi3()).passed());
  CHECK(keranen_check(theta_morphism()).passed());
  CHECK(keranen_check(identity_binary_morphism()).passed());
  CHECK(keranen_check(Morphism(2, 2, {Word::binary(""), Word::binary("")}))
            .passed());
}

TEST_CASE("keranen_check fails 0->01, 1->01 with a shortest counterexample") {
  const Verdict v = keranen_check(doubled01());
  REQUIRE_FALSE(v.passed());
  const Counterexample& cx = *v.counterexample();
  CHECK(cx.input.size() == 3);  // no cubefree word of length <= 2 fails
  CHECK(cx.image == Word::binary("010101"));
  CHECK(cx.kind == Repetition::cube);
  CHECK(is_cube_at(cx.image, cx.start, cx.period));
  CHECK(is_cubefree(cx.input));
}

TEST_CASE("keranen_check rejects non-binary morphisms") {
  const Morphism ternary_id(
      3, 3, {Word::ternary("0"), Word::ternary("1"), Word::ternary("2")});
  CHECK_THROWS_AS(keranen_check(ternary_id), std::invalid_argument);
}

TEST_CASE("brute_check_cubefree") {
  CHECK(brute_check_cubefree(phi3(), 7).passed());
  const Verdict v = brute_check_cubefree(doubled01(), 3);
  REQUIRE_FALSE(v.passed());
  CHECK(v.counterexample()->input.size() == 3);
  // L = 1 exercises the two images alone.
  const Morphism bad(2, 2, {Word::binary("000"), Word::binary("111")});
  CHECK_FALSE(brute_check_cubefree(bad, 1).passed());
  CHECK(brute_check_cubefree(bad, 1).counterexample()->input.size() == 1);
}

TEST_CASE("bs_overlap_check") {
  CHECK(bs_overlap_check(theta_morphism()).passed());
  CHECK(bs_overlap_check(identity_binary_morphism()).passed());
  const Verdict v = bs_overlap_check(phi3());
  REQUIRE_FALSE(v.passed());
  CHECK(v.counterexample()->input == Word::binary("01101001"));
  CHECK(is_overlap_at(v.counterexample()->image, v.counterexample()->start,
                      v.counterexample()->period));

  for (unsigned a = 0; a <= 4; ++a) {
    Morphism power = theta_power_morphism(a);
    CAPTURE(a);
    CHECK(bs_overlap_check(power).passed());
  }
  for (std::size_t k : {3, 5, 7, 11, 13}) {
    CAPTURE(k);
    CHECK_FALSE(bs_overlap_check(corollary_build(k)).passed());
  }
}

TEST_CASE("enumerate_avoidant basic counts and order") {
  CHECK(enumerate_avoidant(2, 3, Repetition::cube).size() == 6);
  CHECK(enumerate_avoidant(2, 4, Repetition::cube).size() == 10);
  CHECK(enumerate_avoidant(3, 3, Repetition::square).size() == 12);
  CHECK(enumerate_avoidant(2, 0, Repetition::cube).size() == 1);

  const auto cubefree3 = enumerate_avoidant(2, 3, Repetition::cube);
  CHECK(cubefree3.front() == Word::binary("001"));
  CHECK(cubefree3.back() == Word::binary("110"));
  for (std::size_t i = 1; i < cubefree3.size(); ++i)
    CHECK(cubefree3[i - 1] < cubefree3[i]);

  CHECK_THROWS_AS(enumerate_avoidant(4, 3, Repetition::cube),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_avoidant(2, 3, Repetition::overlap),
                  std::invalid_argument);
}

TEST_CASE("enumerate_avoidant matches the filter oracle up to length 10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    REQUIRE(enumerate_avoidant(2, n, Repetition::cube) ==
            filter_avoidant(2, n, /*cubes=*/true));
    if (n <= 8)
      REQUIRE(enumerate_avoidant(3, n, Repetition::square) ==
              filter_avoidant(3, n, /*cubes=*/false));
  }
}

TEST_CASE("squarefree_uniform_check") {
  const Morphism ternary_id(
      3, 3, {Word::ternary("0"), Word::ternary("1"), Word::ternary("2")});
  CHECK(squarefree_uniform_check(ternary_id).passed());

  const Morphism bad(
      3, 3, {Word::ternary("01"), Word::ternary("02"), Word::ternary("01")});
  const Verdict v = squarefree_uniform_check(bad);
  REQUIRE_FALSE(v.passed());
  CHECK(v.counterexample()->input == Word::ternary("02"));
  CHECK(v.counterexample()->image == Word::ternary("0101"));

  CHECK_THROWS_AS(squarefree_uniform_check(theta_morphism()),
                  std::invalid_argument);
}

TEST_CASE("criterion and oracle never disagree on fixed random samples") {
  std::mt19937_64 rng(0x5EED0001);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t width = 2 + rng() % 5;
    const Morphism h = random_uniform_binary_morphism(rng, width);
    const Verdict criterion = keranen_check(h);
    if (criterion.passed()) {
      REQUIRE(brute_check_cubefree(h, 7).passed());
    } else {
      const Counterexample& cx = *criterion.counterexample();
      REQUIRE(cx.input.size() <= 4);
      REQUIRE(is_cube_at(cx.image, cx.start, cx.period));
      REQUIRE(apply(h, cx.input) == cx.image);
    }
  }
}

TEST_CASE("verdict counterexamples must re-verify") {
  CHECK_THROWS_AS(Verdict::fail({Word::binary("01"), Word::binary("0110"),
                                 Repetition::cube, 0, 1}),
                  std::logic_error);
  CHECK(Verdict::fail({Word::binary("0"), Word::binary("000"),
                       Repetition::cube, 0, 1})
            .passed() == false);
}

TEST_CASE("verdict serialization") {
  CHECK(to_plain(Verdict::pass()) == "pass\n");
  const Verdict v = keranen_check(doubled01());
  CHECK(to_plain(v) ==
        "fail\ncounterexample: input=001 image=010101 cube=(0, 2)\n");
  CHECK(to_json(Verdict::pass()).find("\"passed\": true") != std::string::npos);
  CHECK(to_json(v).find("\"kind\": \"cube\"") != std::string::npos);
}
