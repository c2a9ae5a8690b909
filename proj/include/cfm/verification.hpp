#pragma once

// Bounded decision criteria and brute-force oracles for cubefree /
// squarefree / overlap-free morphisms, plus avoidant-word enumeration.
// A failed check always carries a counterexample that re-verifies against
// the word predicates; the Verdict constructor enforces this.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfm/morphism.hpp"
#include "cfm/word.hpp"

namespace cfm {

enum class Repetition { square, cube, overlap };

std::string_view repetition_name(Repetition kind);

/// A failing input word together with the repetition found in its image.
struct Counterexample {
  Word input;
  Word image;
  Repetition kind = Repetition::cube;
  std::size_t start = 0;
  std::size_t period = 0;
};

class Verdict {
 public:
  static Verdict pass();
  /// Re-checks the claimed occurrence literally; throws if it is bogus.
  static Verdict fail(Counterexample cx);

  bool passed() const { return passed_; }
  const std::optional<Counterexample>& counterexample() const {
    return counterexample_;
  }

 private:
  Verdict() = default;
  bool passed_ = true;
  std::optional<Counterexample> counterexample_;
};

/// Bounded cubefreeness criterion for uniform binary morphisms: the morphism
/// is cubefree iff the images of all cubefree words of length <= 4 are
/// cubefree. On failure returns the shortest failing word (lex-first among
/// equals) and the cube found.
Verdict keranen_check(const Morphism& h);

/// Exhaustive oracle: images of all cubefree binary words of length <= L.
Verdict brute_check_cubefree(const Morphism& h, std::size_t max_len);

/// Exhaustive oracle: images of all squarefree ternary words of length <= L.
Verdict brute_check_squarefree(const Morphism& h, std::size_t max_len);

/// Berstel-Seebold test: a binary morphism is overlap-free iff the image of
/// 01101001 is overlap-free.
Verdict bs_overlap_check(const Morphism& h);

/// All length-n words over {0..alphabet_size-1} avoiding the repetition, in
/// lexicographic order; depth-first extension re-checks only repetitions
/// ending at the new position. Supports cube and square avoidance.
std::vector<Word> enumerate_avoidant(int alphabet_size, std::size_t n,
                                     Repetition kind);

/// Bounded squarefreeness criterion for uniform ternary morphisms: images of
/// all squarefree words of length <= 3 must be squarefree.
Verdict squarefree_uniform_check(const Morphism& h);

/// Verdict report serialization used by the CLI.
std::string to_json(const Verdict& v);
std::string to_plain(const Verdict& v);

}  // namespace cfm
