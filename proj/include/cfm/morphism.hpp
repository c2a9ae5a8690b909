#pragma once

// Uniform morphisms: per-letter image tables with equal image lengths.
// Provides application, composition, the boundary-pair construction
// theorem_phi (images theta(w_i) with the suffix 010 removed), and
// corollary_build, which produces a k-uniform cubefree binary morphism for
// every k >= 0.

#include <cstddef>
#include <string>
#include <vector>

#include "cfm/word.hpp"

namespace cfm {

/// A uniform morphism between the alphabets {0..source-1} and {0..target-1}.
/// Immutable after construction; width 0 (all images empty) is permitted.
class Morphism {
 public:
  Morphism(int source_alphabet_size, int target_alphabet_size,
           std::vector<Word> images);

  int source_alphabet() const { return source_alphabet_; }
  int target_alphabet() const { return target_alphabet_; }
  std::size_t width() const { return width_; }
  const Word& image(int letter) const;
  const std::vector<Word>& images() const { return images_; }

  bool is_binary() const { return source_alphabet_ == 2 && target_alphabet_ == 2; }
  bool is_ternary() const { return source_alphabet_ == 3 && target_alphabet_ == 3; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_alphabet_ == b.source_alphabet_ &&
           a.target_alphabet_ == b.target_alphabet_ && a.images_ == b.images_;
  }

 private:
  int source_alphabet_;
  int target_alphabet_;
  std::size_t width_;
  std::vector<Word> images_;
};

/// Concatenation of images; |result| = width * |w|.
Word apply(const Morphism& h, const Word& w);

/// (h o g)(a) = h(g(a)); requires g's target alphabet = h's source alphabet.
Morphism compose(const Morphism& h, const Morphism& g);

const Morphism& theta_morphism();              // 0 -> 01, 1 -> 10
const Morphism& identity_binary_morphism();    // 0 -> 0, 1 -> 1
Morphism theta_power_morphism(unsigned a);

/// The width-(2|w0|-3) binary morphism i -> theta(w_i) with suffix 010
/// removed, for distinct cubefree w0, w1 of equal length, each of the form
/// 00{0,1}^m 11 with m >= 5. The result is cubefree; its images carry the
/// prefix 01011 and suffix 11, and both properties plus the bounded
/// cubefreeness criterion are checked at construction.
Morphism theorem_phi(const Word& w0, const Word& w1);

/// A k-uniform cubefree binary morphism, for any k >= 0.
Morphism corollary_build(std::size_t k);

/// Length-n prefix of the fixed point h^omega(seed); requires h binary and
/// h(seed) to begin with seed.
Word iterate_prefix(const Morphism& h, std::uint8_t seed, std::size_t n);

// Morphism file format: JSON with fields source_alphabet, target_alphabet,
// width and images; round-trips bit-exactly.
std::string to_json(const Morphism& h);
Morphism morphism_from_json(const std::string& text);
Morphism load_morphism(const std::string& path);
void save_morphism(const Morphism& h, const std::string& path);

}  // namespace cfm
