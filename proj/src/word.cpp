#include "cfm/word.hpp"

#include <algorithm>

namespace cfm {

Word::Word(std::vector<std::uint8_t> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1)
    throw std::invalid_argument("Word: alphabet size must be >= 1");
  for (std::uint8_t s : symbols_)
    if (s >= alphabet_size_)
      throw std::invalid_argument("Word: symbol id out of alphabet range");
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("Word: invalid character in word text");
    symbols.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(symbols), alphabet_size);
}

Word Word::single(std::uint8_t symbol, int alphabet_size) {
  return Word(std::vector<std::uint8_t>{symbol}, alphabet_size);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  ensure(pos + len <= size(), "Word::subword: window out of range");
  Word out;
  out.symbols_.assign(symbols_.begin() + pos, symbols_.begin() + pos + len);
  out.alphabet_size_ = alphabet_size_;
  return out;
}

Word Word::drop_first(std::size_t n) const {
  ensure(n <= size(), "Word::drop_first: word too short");
  return subword(n, size() - n);
}

Word Word::drop_last(std::size_t n) const {
  ensure(n <= size(), "Word::drop_last: word too short");
  return subword(0, size() - n);
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(),
                    symbols_.begin());
}

bool Word::ends_with(const Word& suffix) const {
  return suffix.size() <= size() &&
         std::equal(suffix.symbols_.begin(), suffix.symbols_.end(),
                    symbols_.end() - suffix.size());
}

bool Word::contains(const Word& factor) const {
  return std::search(symbols_.begin(), symbols_.end(),
                     factor.symbols_.begin(),
                     factor.symbols_.end()) != symbols_.end();
}

Word& Word::operator+=(const Word& rhs) {
  symbols_.insert(symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  alphabet_size_ = std::max(alphabet_size_, rhs.alphabet_size_);
  return *this;
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (std::uint8_t s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

bool is_square_at(const Word& w, std::size_t start, std::size_t period) {
  if (period == 0 || start + 2 * period > w.size()) return false;
  for (std::size_t j = 0; j < period; ++j)
    if (w[start + j] != w[start + period + j]) return false;
  return true;
}

bool is_cube_at(const Word& w, std::size_t start, std::size_t period) {
  if (period == 0 || start + 3 * period > w.size()) return false;
  for (std::size_t j = 0; j < 2 * period; ++j)
    if (w[start + j] != w[start + period + j]) return false;
  return true;
}

bool is_overlap_at(const Word& w, std::size_t start, std::size_t period) {
  if (period == 0 || start + 2 * period + 1 > w.size()) return false;
  for (std::size_t j = 0; j <= period; ++j)
    if (w[start + j] != w[start + period + j]) return false;
  return true;
}

std::optional<CubeOccurrence> find_cube(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start + 3 <= n; ++start) {
    const std::size_t max_p = (n - start) / 3;
    for (std::size_t p = 1; p <= max_p; ++p) {
      std::size_t j = 0;
      while (j < 2 * p && w[start + j] == w[start + p + j]) ++j;
      if (j == 2 * p) {
        CubeOccurrence occ{start, p};
        ensure(is_cube_at(w, occ.start, occ.period),
               "find_cube: occurrence failed re-check");
        return occ;
      }
    }
  }
  return std::nullopt;
}

std::optional<Occurrence> find_square(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start + 2 <= n; ++start) {
    const std::size_t max_p = (n - start) / 2;
    for (std::size_t p = 1; p <= max_p; ++p) {
      std::size_t j = 0;
      while (j < p && w[start + j] == w[start + p + j]) ++j;
      if (j == p) return Occurrence{start, p};
    }
  }
  return std::nullopt;
}

std::optional<Occurrence> find_overlap(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start + 3 <= n; ++start) {
    const std::size_t max_p = (n - start - 1) / 2;
    for (std::size_t p = 1; p <= max_p; ++p) {
      std::size_t j = 0;
      while (j <= p && w[start + j] == w[start + p + j]) ++j;
      if (j == p + 1) return Occurrence{start, p};
    }
  }
  return std::nullopt;
}

Word complement(const Word& w) {
  if (w.alphabet_size() != 2)
    throw std::invalid_argument("complement: word must be binary");
  std::vector<std::uint8_t> symbols;
  symbols.reserve(w.size());
  for (std::uint8_t s : w.symbols())
    symbols.push_back(static_cast<std::uint8_t>(1 - s));
  return Word(std::move(symbols), 2);
}

Word strip_suffix(const Word& w, const Word& s) {
  if (!w.ends_with(s))
    throw std::invalid_argument("strip_suffix: not a suffix");
  return w.drop_last(s.size());
}

std::set<Word> factors_of_form(const Word& w, std::size_t len,
                               const Word& prefix, const Word& suffix) {
  std::set<Word> out;
  if (len > w.size() || prefix.size() > len || suffix.size() > len)
    return out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    Word window = w.subword(i, len);
    if (window.starts_with(prefix) && window.ends_with(suffix))
      out.insert(std::move(window));
  }
  return out;
}

}  // namespace cfm
