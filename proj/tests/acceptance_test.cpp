// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion. Each criterion is self-contained and uses
// the brute-force oracles as ground truth.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <set>

#include "cfm/morphism.hpp"
#include "cfm/search.hpp"
#include "cfm/thue_morse.hpp"
#include "cfm/verification.hpp"
#include "cfm/witnesses.hpp"
#include "oracles.hpp"

using namespace cfm;
using namespace cfm::testing;

namespace {

class Criterion {
 public:
  Criterion(int number, const char* name, double budget_seconds)
      : number_(number), name_(name), budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void finish(bool ok) const {
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    std::printf("criterion %d (%s): %s (%.2fs, budget %.0fs)\n", number_,
                name_, ok ? "PASS" : "FAIL", secs, budget_);
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", number_, " failed");
    CHECK_MESSAGE(secs < budget_, "criterion ", number_, " over budget");
  }

 private:
  int number_;
  const char* name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

std::set<Word> pair_set(const WitnessPair& pair) {
  return {pair.first, pair.second};
}

std::set<Word> words(const char* a, const char* b) {
  return {Word::binary(a), Word::binary(b)};
}

std::vector<std::size_t> marker_positions(const Word& w) {
  static const Word marker = Word::binary("10101");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 5 <= w.size(); ++i)
    if (w.subword(i, 5) == marker) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("criterion 1: corollary totality 0..128") {
  Criterion criterion(1, "corollary totality 0..128", 60.0);
  bool ok = true;
  for (std::size_t k = 0; k <= 128 && ok; ++k) {
    const Morphism h = corollary_build(k);
    ok = h.width() == k && h.is_binary() && keranen_check(h).passed() &&
         brute_check_cubefree(h, 7).passed();
  }
  criterion.finish(ok);
}

TEST_CASE("criterion 2: golden tables") {
  Criterion criterion(2, "golden tables", 30.0);
  bool ok = true;

  const auto image_set = [](const Morphism& h) {
    return std::set<Word>{h.image(0), h.image(1)};
  };
  ok = ok && image_set(corollary_build(3)) == words("001", "011");
  ok = ok && image_set(corollary_build(5)) == words("01001", "10110");
  ok = ok && image_set(corollary_build(7)) == words("0010011", "0011011");
  ok = ok &&
       image_set(corollary_build(11)) == words("00101001011", "00101001101");
  ok = ok && image_set(corollary_build(13)) ==
                 words("0010010110011", "0010011001011");

  ok = ok && pair_set(lemma1_witnesses(4).pair_0y0) == words("0010", "0100");
  ok = ok && pair_set(lemma1_witnesses(4).pair_0z1) == words("0101", "0011");
  ok = ok && pair_set(lemma1_witnesses(5).pair_0y0) == words("00110", "01100");
  ok = ok && pair_set(lemma1_witnesses(5).pair_0z1) == words("01101", "01001");
  ok = ok &&
       pair_set(lemma1_witnesses(6).pair_0y0) == words("001100", "011010");
  ok = ok &&
       pair_set(lemma1_witnesses(6).pair_0z1) == words("001011", "010011");

  const std::pair<const char*, const char*> lemma2_table[] = {
      {"0100101", "0101101"},
      {"010011001", "011001101"},
      {"01001100101", "01100101101"},
      {"0100101101001", "0110100101101"},
      {"011001011001101", "010011001011001"},
      {"01001011001101001", "01101001011001101"},
      {"0100101100110100101", "0101101001100101101"},
      {"011010011001011001101", "011001101001100101101"}};
  for (std::size_t k = 7; k <= 21; k += 2)
    ok = ok && pair_set(lemma2_witnesses(k).pair_01x01) ==
                   words(lemma2_table[(k - 7) / 2].first,
                         lemma2_table[(k - 7) / 2].second);

  const std::pair<const char*, const char*> lemma3_table[] = {
      {"001001011", "001010011"},     {"0010011011", "0010110011"},
      {"00100110011", "00101001011"}, {"001001010011", "001001011011"},
      {"0010010110011", "0010011001011"},
      {"00100101001011", "00100101101011"}};
  for (std::size_t k = 9; k <= 14; ++k)
    ok = ok && pair_set(lemma3_witnesses(k)) ==
                   words(lemma3_table[k - 9].first, lemma3_table[k - 9].second);

  criterion.finish(ok);
}

TEST_CASE("criterion 3: Thue-Morse prefixes") {
  Criterion criterion(3, "Thue-Morse prefixes", 10.0);
  bool ok = tm_prefix(16) == Word::binary("0110100110010110");
  // The iterated and bit-parity routes must agree; tm_prefix checks this on
  // every call, and the parity route is recomputed here independently.
  const Word t = tm_prefix(65536);
  ok = ok && t.size() == 65536;
  for (std::size_t i = 0; i < t.size() && ok; ++i)
    ok = t[i] == (std::popcount(i) & 1u);
  ok = ok && is_overlapfree(tm_prefix(4096));
  criterion.finish(ok);
}

TEST_CASE("criterion 4: theorem structural invariants") {
  Criterion criterion(4, "theorem structural invariants", 120.0);
  bool ok = true;

  std::vector<Word> cubefree_words;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const Word& w : enumerate_avoidant(2, n, Repetition::cube))
      cubefree_words.push_back(w);

  for (std::size_t k = 15; k <= 61 && ok; k += 2) {
    const WitnessPair pair = lemma3_witnesses((k + 3) / 2);
    const Morphism phi = theorem_phi(pair.first, pair.second);
    ok = phi.width() == k;
    for (int letter = 0; letter < 2; ++letter)
      ok = ok && phi.image(letter).starts_with(Word::binary("01011")) &&
           phi.image(letter).ends_with(Word::binary("11"));
    for (const Word& w : cubefree_words) {
      const auto positions = marker_positions(apply(phi, w));
      ok = ok && positions.size() == w.size() - 1;
      for (std::size_t p : positions)
        ok = ok && p % k == positions.front() % k;
      if (!ok) break;
    }
  }
  criterion.finish(ok);
}

TEST_CASE("criterion 5: criterion/oracle agreement on 2000 fixed-seed samples") {
  Criterion criterion(5, "criterion/oracle agreement", 120.0);
  bool ok = true;
  std::mt19937_64 rng(0x5EEDC0DE);  // fixed, documented sampling seed
  for (int trial = 0; trial < 2000 && ok; ++trial) {
    const std::size_t width = 2 + rng() % 7;  // widths 2..8
    const Morphism h = random_uniform_binary_morphism(rng, width);
    const Verdict verdict = keranen_check(h);
    if (verdict.passed()) {
      ok = brute_check_cubefree(h, 9).passed();
    } else {
      const Counterexample& cx = *verdict.counterexample();
      ok = cx.input.size() <= 4 && apply(h, cx.input) == cx.image &&
           is_cube_at(cx.image, cx.start, cx.period);
    }
  }
  criterion.finish(ok);
}

TEST_CASE("criterion 6: overlap-free census widths 1..8") {
  Criterion criterion(6, "overlap-free census widths 1..8", 900.0);
  bool ok = true;
  for (std::size_t width = 1; width <= 8 && ok; ++width) {
    const SearchReport report = search_overlapfree_uniform(width);
    const bool expect_nonempty =
        width == 1 || width == 2 || width == 4 || width == 8;
    ok = !report.found.empty() == expect_nonempty;
    if (width == 2) {
      ok = ok && report.found.size() == 2 &&
           report.found[0] == theta_morphism() &&
           report.found[1] ==
               Morphism(2, 2, {Word::binary("10"), Word::binary("01")});
    }
  }
  criterion.finish(ok);
}

TEST_CASE("criterion 7: squarefree ternary searches") {
  Criterion criterion(7, "squarefree ternary searches", 600.0);
  bool ok = true;
  for (std::size_t width = 2; width <= 10 && ok; ++width)
    ok = search_squarefree_ternary_uniform(width, false).found.empty();
  if (ok) {
    const SearchReport report = search_squarefree_ternary_uniform(11, true);
    ok = !report.found.empty();
    for (const Morphism& h : report.found)
      ok = ok && squarefree_uniform_check(h).passed() &&
           brute_check_squarefree(h, 6).passed();
  }
  criterion.finish(ok);
}

TEST_CASE("criterion 8: enumeration cross-check n = 0..12") {
  Criterion criterion(8, "enumeration cross-check", 5.0);
  bool ok = true;
  for (std::size_t n = 0; n <= 12 && ok; ++n) {
    const auto dfs = enumerate_avoidant(2, n, Repetition::cube);
    const auto filtered = filter_avoidant(2, n, /*cubes=*/true);
    ok = dfs.size() == filtered.size() &&
         std::equal(dfs.begin(), dfs.end(), filtered.begin());
  }
  criterion.finish(ok);
}
