#pragma once

// The Thue-Morse substitution 0 -> 01, 1 -> 10, its powers, and prefixes /
// factor membership for its fixed point t = 0110100110010110...

#include <cstddef>

#include "cfm/word.hpp"

namespace cfm {

/// Letter-wise substitution 0 -> 01, 1 -> 10. Rejects non-binary input.
Word theta(const Word& w);

/// theta applied `a` times; a = 0 is the identity.
Word theta_power(unsigned a, const Word& w);

/// The length-n prefix of t. Computed by two independent routes -- iterating
/// theta on "0", and the bit-parity rule t[i] = parity of popcount(i) -- and
/// checked against each other on every call.
Word tm_prefix(std::size_t n);

/// Whether `factor` occurs in t; searches the prefix of length
/// 10*|factor| + 64, which is wide enough for every factor that occurs at
/// all at the lengths this library handles (t is uniformly recurrent).
bool tm_contains(const Word& factor);

}  // namespace cfm
