#pragma once

// Constructive producers of the witness words behind the k-uniform cubefree
// construction: pairs of distinct Thue-Morse factors with prescribed
// one-or-two-letter boundaries (lemma1, lemma2) and pairs of distinct
// cubefree words of the form 00...11 (lemma3). Every output is revalidated
// on every call: distinctness, length, boundary form, and factor membership
// or cubefreeness as appropriate.

#include <cstddef>
#include <string_view>

#include "cfm/word.hpp"

namespace cfm {

/// Boundary shape of a witness word; the middle part is free.
enum class WitnessForm { f0y0, f0z1, f01x01, f01x10, f00x11 };

std::string_view form_name(WitnessForm form);  // "0y0", "0z1", ...
Word form_prefix(WitnessForm form);
Word form_suffix(WitnessForm form);

/// Two distinct words of equal length sharing a boundary form.
struct WitnessPair {
  Word first;
  Word second;
  WitnessForm form;

  std::size_t length() const { return first.size(); }
};

struct Lemma1Witnesses {
  WitnessPair pair_0y0;
  WitnessPair pair_0z1;
};

struct Lemma2Witnesses {
  WitnessPair pair_01x01;
  WitnessPair pair_01x10;
};

/// For k >= 4: two distinct factors of t of length k of form 0y0 and two of
/// form 0z1. Base cases k = 4,5,6 are fixed tables; larger k halve into them
/// through theta images.
Lemma1Witnesses lemma1_witnesses(std::size_t k);

/// For k >= 7: two distinct factors of t of length k of form 01x01 and two
/// of form 01x10.
Lemma2Witnesses lemma2_witnesses(std::size_t k);

/// For k >= 9: two distinct cubefree words of length k of form 00x11.
WitnessPair lemma3_witnesses(std::size_t k);

}  // namespace cfm
