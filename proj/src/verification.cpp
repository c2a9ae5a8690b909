#include "cfm/verification.hpp"

#include <sstream>

#include <json.hpp>

namespace cfm {
namespace {

bool reverify(const Counterexample& cx) {
  switch (cx.kind) {
    case Repetition::square: return is_square_at(cx.image, cx.start, cx.period);
    case Repetition::cube: return is_cube_at(cx.image, cx.start, cx.period);
    case Repetition::overlap:
      return is_overlap_at(cx.image, cx.start, cx.period);
  }
  return false;
}

// Checks h on every `kind`-free source word of length 1..max_len, shortest
// first and lexicographic within a length, and fails on the first image that
// contains the repetition.
Verdict check_images(const Morphism& h, std::size_t max_len, Repetition kind) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : enumerate_avoidant(h.source_alphabet(), len, kind)) {
      Word image = apply(h, w);
      std::optional<Occurrence> occ = kind == Repetition::cube
                                          ? find_cube(image)
                                          : find_square(image);
      if (occ)
        return Verdict::fail(
            {w, std::move(image), kind, occ->start, occ->period});
    }
  }
  return Verdict::pass();
}

}  // namespace

std::string_view repetition_name(Repetition kind) {
  switch (kind) {
    case Repetition::square: return "square";
    case Repetition::cube: return "cube";
    case Repetition::overlap: return "overlap";
  }
  throw std::invalid_argument("repetition_name: unknown kind");
}

Verdict Verdict::pass() { return Verdict(); }

Verdict Verdict::fail(Counterexample cx) {
  ensure(reverify(cx), "Verdict: counterexample failed re-verification");
  Verdict v;
  v.passed_ = false;
  v.counterexample_ = std::move(cx);
  return v;
}

Verdict keranen_check(const Morphism& h) {
  if (!h.is_binary())
    throw std::invalid_argument("keranen_check: morphism must be binary");
  return check_images(h, 4, Repetition::cube);
}

Verdict brute_check_cubefree(const Morphism& h, std::size_t max_len) {
  if (!h.is_binary())
    throw std::invalid_argument("brute_check_cubefree: morphism must be binary");
  if (max_len < 1)
    throw std::invalid_argument("brute_check_cubefree: max_len must be >= 1");
  return check_images(h, max_len, Repetition::cube);
}

Verdict brute_check_squarefree(const Morphism& h, std::size_t max_len) {
  if (!h.is_ternary())
    throw std::invalid_argument("brute_check_squarefree: morphism must be ternary");
  if (max_len < 1)
    throw std::invalid_argument("brute_check_squarefree: max_len must be >= 1");
  return check_images(h, max_len, Repetition::square);
}

Verdict bs_overlap_check(const Morphism& h) {
  if (h.source_alphabet() != 2 || h.target_alphabet() != 2)
    throw std::invalid_argument("bs_overlap_check: morphism must be binary");
  const Word test = Word::binary("01101001");
  Word image = apply(h, test);
  if (std::optional<Occurrence> occ = find_overlap(image))
    return Verdict::fail(
        {test, std::move(image), Repetition::overlap, occ->start, occ->period});
  return Verdict::pass();
}

std::vector<Word> enumerate_avoidant(int alphabet_size, std::size_t n,
                                     Repetition kind) {
  if (alphabet_size != 2 && alphabet_size != 3)
    throw std::invalid_argument("enumerate_avoidant: alphabet size must be 2 or 3");
  if (kind == Repetition::overlap)
    throw std::invalid_argument("enumerate_avoidant: supports cube and square only");

  // True iff a repetition of the requested kind ends at the last position.
  auto tail_hit = [&](const std::vector<std::uint8_t>& w) {
    const std::size_t len = w.size();
    if (kind == Repetition::square) {
      for (std::size_t p = 1; 2 * p <= len; ++p) {
        std::size_t j = 0;
        while (j < p && w[len - 2 * p + j] == w[len - p + j]) ++j;
        if (j == p) return true;
      }
    } else {
      for (std::size_t p = 1; 3 * p <= len; ++p) {
        std::size_t j = 0;
        while (j < 2 * p && w[len - 3 * p + j] == w[len - 2 * p + j]) ++j;
        if (j == 2 * p) return true;
      }
    }
    return false;
  };

  std::vector<Word> out;
  std::vector<std::uint8_t> cur;
  auto dfs = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.emplace_back(cur, alphabet_size);
      return;
    }
    for (std::uint8_t s = 0; s < alphabet_size; ++s) {
      cur.push_back(s);
      if (!tail_hit(cur)) self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

Verdict squarefree_uniform_check(const Morphism& h) {
  if (!h.is_ternary())
    throw std::invalid_argument("squarefree_uniform_check: morphism must be ternary");
  return check_images(h, 3, Repetition::square);
}

std::string to_plain(const Verdict& v) {
  if (v.passed()) return "pass\n";
  const Counterexample& cx = *v.counterexample();
  std::ostringstream out;
  out << "fail\ncounterexample: input=" << cx.input.str()
      << " image=" << cx.image.str() << " " << repetition_name(cx.kind) << "=("
      << cx.start << ", " << cx.period << ")\n";
  return out.str();
}

std::string to_json(const Verdict& v) {
  nlohmann::ordered_json doc;
  doc["passed"] = v.passed();
  if (!v.passed()) {
    const Counterexample& cx = *v.counterexample();
    doc["counterexample"] = {{"input", cx.input.str()},
                             {"image", cx.image.str()},
                             {"kind", std::string(repetition_name(cx.kind))},
                             {"start", cx.start},
                             {"period", cx.period}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace cfm
