#include "cfm/thue_morse.hpp"

#include <bit>

namespace cfm {

Word theta(const Word& w) {
  if (w.alphabet_size() != 2)
    throw std::invalid_argument("theta: word must be binary");
  std::vector<std::uint8_t> out;
  out.reserve(2 * w.size());
  for (std::uint8_t s : w.symbols()) {
    out.push_back(s);
    out.push_back(static_cast<std::uint8_t>(1 - s));
  }
  return Word(std::move(out), 2);
}

Word theta_power(unsigned a, const Word& w) {
  Word out = w;
  if (out.alphabet_size() != 2)
    throw std::invalid_argument("theta_power: word must be binary");
  for (unsigned i = 0; i < a; ++i) out = theta(out);
  return out;
}

Word tm_prefix(std::size_t n) {
  Word iterated = Word::binary("0");
  while (iterated.size() < n) iterated = theta(iterated);
  Word result = iterated.subword(0, n);

  // Independent route: t[i] is the parity of the 1-bits of i.
  for (std::size_t i = 0; i < n; ++i)
    ensure(result[i] == (std::popcount(i) & 1u),
           "tm_prefix: iteration and bit-parity routes disagree");
  return result;
}

bool tm_contains(const Word& factor) {
  if (factor.alphabet_size() != 2)
    throw std::invalid_argument("tm_contains: word must be binary");
  return tm_prefix(10 * factor.size() + 64).contains(factor);
}

}  // namespace cfm
