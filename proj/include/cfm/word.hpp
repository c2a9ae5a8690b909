#pragma once

// Finite words over small alphabets ({0,1} and {0,1,2}) together with the
// repetition predicates everything else is built on: squares xx, cubes xxx
// and overlaps axaxa (a a letter, x possibly empty).
//
// Textual encoding throughout the library and the CLI: one ASCII character
// per symbol, '0'..'2', no separators.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfm {

// Always-on invariant check. Throws instead of assert() so the checks stay
// active in release builds; these guard logic errors, not user input.
inline void ensure(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

/// A finite word over an explicit alphabet {0, ..., alphabet_size-1}.
/// Comparison is lexicographic on the symbol sequence; the alphabet is
/// carried as context and does not participate in equality.
class Word {
 public:
  Word() = default;  // empty binary word
  Word(std::vector<std::uint8_t> symbols, int alphabet_size);

  /// Parses "0110"-style text; every digit must be < alphabet_size.
  static Word parse(std::string_view text, int alphabet_size);
  static Word binary(std::string_view text) { return parse(text, 2); }
  static Word ternary(std::string_view text) { return parse(text, 3); }
  static Word single(std::uint8_t symbol, int alphabet_size);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int alphabet_size() const { return alphabet_size_; }
  std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word drop_first(std::size_t n = 1) const;
  Word drop_last(std::size_t n = 1) const;
  bool starts_with(const Word& prefix) const;
  bool ends_with(const Word& suffix) const;
  bool contains(const Word& factor) const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<std::uint8_t> symbols_;
  int alphabet_size_ = 2;
};

/// (start, period) witness of a repetition. For a cube the three
/// period-length blocks starting at `start` are equal; for a square the two
/// blocks; for an overlap positions start..start+period match their shift
/// by `period` (total length 2*period+1).
struct Occurrence {
  std::size_t start = 0;
  std::size_t period = 0;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};
using CubeOccurrence = Occurrence;

// Literal re-checks of a claimed occurrence.
bool is_square_at(const Word& w, std::size_t start, std::size_t period);
bool is_cube_at(const Word& w, std::size_t start, std::size_t period);
bool is_overlap_at(const Word& w, std::size_t start, std::size_t period);

/// Finds the cube occurrence with smallest start (ties: smallest period),
/// or nothing if `w` is cubefree. The empty word is cubefree.
std::optional<CubeOccurrence> find_cube(const Word& w);
std::optional<Occurrence> find_square(const Word& w);
std::optional<Occurrence> find_overlap(const Word& w);

inline bool is_cubefree(const Word& w) { return !find_cube(w).has_value(); }
inline bool is_squarefree(const Word& w) { return !find_square(w).has_value(); }
inline bool is_overlapfree(const Word& w) { return !find_overlap(w).has_value(); }

/// 0 <-> 1 exchange; rejects non-binary words.
Word complement(const Word& w);

/// w with its last |s| symbols removed; throws if s is not a suffix of w.
Word strip_suffix(const Word& w, const Word& s);

/// All distinct length-`len` factors of `w` that begin with `prefix` and end
/// with `suffix`. Each window is tested literally, so prefix and suffix may
/// overlap when len < |prefix| + |suffix|.
std::set<Word> factors_of_form(const Word& w, std::size_t len,
                               const Word& prefix, const Word& suffix);

}  // namespace cfm
