#include "cfm/witnesses.hpp"

#include <array>
#include <utility>

#include "cfm/thue_morse.hpp"

namespace cfm {
namespace {

constexpr std::size_t kMaxRecursionDepth = 64;

WitnessPair make_pair(Word a, Word b, WitnessForm form, std::size_t k) {
  WitnessPair pair{std::move(a), std::move(b), form};
  ensure(pair.first != pair.second, "witness pair: words must be distinct");
  ensure(pair.first.size() == k && pair.second.size() == k,
         "witness pair: wrong length");
  const Word prefix = form_prefix(form);
  const Word suffix = form_suffix(form);
  ensure(pair.first.starts_with(prefix) && pair.first.ends_with(suffix) &&
             pair.second.starts_with(prefix) && pair.second.ends_with(suffix),
         "witness pair: boundary form violated");
  return pair;
}

WitnessPair tm_pair(Word a, Word b, WitnessForm form, std::size_t k) {
  WitnessPair pair = make_pair(std::move(a), std::move(b), form, k);
  ensure(tm_contains(pair.first) && tm_contains(pair.second),
         "witness pair: not a factor of the Thue-Morse word");
  return pair;
}

WitnessPair theta_of(const WitnessPair& pair, WitnessForm form,
                     std::size_t k) {
  return tm_pair(theta(pair.first), theta(pair.second), form, k);
}

WitnessPair theta_of_truncated(const WitnessPair& pair, WitnessForm form,
                               std::size_t k) {
  return tm_pair(theta(pair.first).drop_last(), theta(pair.second).drop_last(),
                 form, k);
}

Lemma1Witnesses lemma1_impl(std::size_t k, std::size_t depth) {
  ensure(depth <= kMaxRecursionDepth, "lemma1_witnesses: recursion too deep");

  switch (k) {
    case 4:
      return {tm_pair(Word::binary("0010"), Word::binary("0100"),
                      WitnessForm::f0y0, k),
              tm_pair(Word::binary("0101"), Word::binary("0011"),
                      WitnessForm::f0z1, k)};
    case 5:
      return {tm_pair(Word::binary("00110"), Word::binary("01100"),
                      WitnessForm::f0y0, k),
              tm_pair(Word::binary("01101"), Word::binary("01001"),
                      WitnessForm::f0z1, k)};
    case 6:
      return {tm_pair(Word::binary("001100"), Word::binary("011010"),
                      WitnessForm::f0y0, k),
              tm_pair(Word::binary("001011"), Word::binary("010011"),
                      WitnessForm::f0z1, k)};
    default:
      break;
  }

  if (k % 2 == 0) {
    // k = 2r. theta(0y0) = 01 theta(y) 01 lands in form 0z1 and
    // theta(0z1) = 01 theta(z) 10 lands in form 0y0.
    Lemma1Witnesses sub = lemma1_impl(k / 2, depth + 1);
    return {theta_of(sub.pair_0z1, WitnessForm::f0y0, k),
            theta_of(sub.pair_0y0, WitnessForm::f0z1, k)};
  }
  // k = 2r - 1: the same images with the final letter removed keep the form
  // of their source: 01 theta(y) 0 and 01 theta(z) 1.
  Lemma1Witnesses sub = lemma1_impl((k + 1) / 2, depth + 1);
  return {theta_of_truncated(sub.pair_0y0, WitnessForm::f0y0, k),
          theta_of_truncated(sub.pair_0z1, WitnessForm::f0z1, k)};
}

// 01x01 pairs for odd 7 <= k <= 21.
const std::array<std::pair<const char*, const char*>, 8> kOdd01x01Table = {{
    {"0100101", "0101101"},
    {"010011001", "011001101"},
    {"01001100101", "01100101101"},
    {"0100101101001", "0110100101101"},
    {"011001011001101", "010011001011001"},
    {"01001011001101001", "01101001011001101"},
    {"0100101100110100101", "0101101001100101101"},
    {"011010011001011001101", "011001101001100101101"},
}};

// Two lexicographically smallest distinct length-k factors of t of the given
// boundary form, scanned over the same window tm_contains uses.
WitnessPair search_tm_pair(std::size_t k, WitnessForm form) {
  std::set<Word> matches = factors_of_form(tm_prefix(10 * k + 64), k,
                                           form_prefix(form),
                                           form_suffix(form));
  ensure(matches.size() >= 2, "witness search: fewer than two matches in t");
  auto it = matches.begin();
  Word a = *it++;
  Word b = *it;
  return tm_pair(std::move(a), std::move(b), form, k);
}

// Cuts the window [3, 3+k) out of theta^3(u) for both words of `src` and
// checks the boundary form on extraction.
WitnessPair cut_theta3_windows(const WitnessPair& src, WitnessForm form,
                               std::size_t k) {
  auto cut = [&](const Word& u) {
    Word image = theta_power(3, u);
    ensure(image.size() == 8 * u.size(), "theta^3 image has wrong length");
    ensure(3 + k <= image.size(), "theta^3 window out of range");
    return image.subword(3, k);
  };
  return tm_pair(cut(src.first), cut(src.second), form, k);
}

}  // namespace

std::string_view form_name(WitnessForm form) {
  switch (form) {
    case WitnessForm::f0y0: return "0y0";
    case WitnessForm::f0z1: return "0z1";
    case WitnessForm::f01x01: return "01x01";
    case WitnessForm::f01x10: return "01x10";
    case WitnessForm::f00x11: return "00x11";
  }
  throw std::invalid_argument("form_name: unknown form");
}

Word form_prefix(WitnessForm form) {
  switch (form) {
    case WitnessForm::f0y0:
    case WitnessForm::f0z1: return Word::binary("0");
    case WitnessForm::f01x01:
    case WitnessForm::f01x10: return Word::binary("01");
    case WitnessForm::f00x11: return Word::binary("00");
  }
  throw std::invalid_argument("form_prefix: unknown form");
}

Word form_suffix(WitnessForm form) {
  switch (form) {
    case WitnessForm::f0y0: return Word::binary("0");
    case WitnessForm::f0z1: return Word::binary("1");
    case WitnessForm::f01x01: return Word::binary("01");
    case WitnessForm::f01x10: return Word::binary("10");
    case WitnessForm::f00x11: return Word::binary("11");
  }
  throw std::invalid_argument("form_suffix: unknown form");
}

Lemma1Witnesses lemma1_witnesses(std::size_t k) {
  if (k < 4)
    throw std::invalid_argument("lemma1_witnesses: requires k >= 4");
  return lemma1_impl(k, 0);
}

Lemma2Witnesses lemma2_witnesses(std::size_t k) {
  if (k < 7)
    throw std::invalid_argument("lemma2_witnesses: requires k >= 7");

  if (k % 2 == 0) {
    // k = 2r: theta lifts the length-r boundary pairs,
    // theta(0y0) = 01 theta(y) 01 and theta(0z1) = 01 theta(z) 10.
    Lemma1Witnesses sub = lemma1_witnesses(k / 2);
    return {theta_of(sub.pair_0y0, WitnessForm::f01x01, k),
            theta_of(sub.pair_0z1, WitnessForm::f01x10, k)};
  }

  if (k <= 21) {
    const auto& [a, b] = kOdd01x01Table[(k - 7) / 2];
    return {tm_pair(Word::binary(a), Word::binary(b), WitnessForm::f01x01, k),
            search_tm_pair(k, WitnessForm::f01x10)};
  }

  // Odd k >= 23: k is one of 8r-9, 8r-7, 8r-5, 8r-3 with r >= 4. Both words
  // of a length-r boundary pair expand under theta^3 to
  //   theta^3(0y0) = 01101001 ... 01101001
  //   theta^3(0z1) = 01101001 ... 10010110
  // and the window starting at the 01 at offset 3 of the leading block and
  // ending at a 01 (resp. 10) inside the trailing block has length exactly k.
  // Which trailing block carries the needed ending at offset 3+k-2 decides
  // which source pair serves which form.
  std::size_t r = 0;
  WitnessForm src01 = WitnessForm::f0y0;  // source form for the 01x01 pair
  switch (k % 8) {
    case 7: r = (k + 9) / 8; src01 = WitnessForm::f0y0; break;  // k = 8r-9
    case 1: r = (k + 7) / 8; src01 = WitnessForm::f0z1; break;  // k = 8r-7
    case 3: r = (k + 5) / 8; src01 = WitnessForm::f0z1; break;  // k = 8r-5
    case 5: r = (k + 3) / 8; src01 = WitnessForm::f0y0; break;  // k = 8r-3
    default: ensure(false, "lemma2_witnesses: impossible residue");
  }
  ensure(r >= 4, "lemma2_witnesses: theta^3 case needs r >= 4");
  Lemma1Witnesses sub = lemma1_witnesses(r);
  const WitnessPair& for01 =
      (src01 == WitnessForm::f0y0) ? sub.pair_0y0 : sub.pair_0z1;
  const WitnessPair& for10 =
      (src01 == WitnessForm::f0y0) ? sub.pair_0z1 : sub.pair_0y0;
  return {cut_theta3_windows(for01, WitnessForm::f01x01, k),
          cut_theta3_windows(for10, WitnessForm::f01x10, k)};
}

WitnessPair lemma3_witnesses(std::size_t k) {
  if (k < 9)
    throw std::invalid_argument("lemma3_witnesses: requires k >= 9");

  static const std::array<std::pair<const char*, const char*>, 6> kBase = {{
      {"001001011", "001010011"},
      {"0010011011", "0010110011"},
      {"00100110011", "00101001011"},
      {"001001010011", "001001011011"},
      {"0010010110011", "0010011001011"},
      {"00100101001011", "00100101101011"},
  }};

  WitnessPair pair = [&] {
    if (k <= 14) {
      const auto& [a, b] = kBase[k - 9];
      return make_pair(Word::binary(a), Word::binary(b), WitnessForm::f00x11,
                       k);
    }
    if (k % 2 == 0) {
      // k = 2r - 2: complement of theta(01x10) with the outer letters
      // removed, i.e. of 110 theta(x) 100.
      const std::size_t r = (k + 2) / 2;
      WitnessPair src = lemma2_witnesses(r).pair_01x10;
      auto build = [](const Word& w) {
        return complement(theta(w).drop_first().drop_last());
      };
      return make_pair(build(src.first), build(src.second),
                       WitnessForm::f00x11, k);
    }
    // k = 2r + 1: complement of 11 theta(01x10) with the last letter
    // removed, i.e. of 110110 theta(x) 100.
    const std::size_t r = (k - 1) / 2;
    WitnessPair src = lemma2_witnesses(r).pair_01x10;
    auto build = [](const Word& w) {
      return complement((Word::binary("11") + theta(w)).drop_last());
    };
    return make_pair(build(src.first), build(src.second), WitnessForm::f00x11,
                     k);
  }();

  ensure(is_cubefree(pair.first) && is_cubefree(pair.second),
         "lemma3_witnesses: output not cubefree");
  return pair;
}

}  // namespace cfm
