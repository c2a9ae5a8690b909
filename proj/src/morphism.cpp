#include "cfm/morphism.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cfm/thue_morse.hpp"
#include "cfm/verification.hpp"
#include "cfm/witnesses.hpp"

namespace cfm {

Morphism::Morphism(int source_alphabet_size, int target_alphabet_size,
                   std::vector<Word> images)
    : source_alphabet_(source_alphabet_size),
      target_alphabet_(target_alphabet_size),
      width_(0),
      images_(std::move(images)) {
  if (source_alphabet_ < 1 || target_alphabet_ < 1)
    throw std::invalid_argument("Morphism: alphabet sizes must be >= 1");
  if (images_.size() != static_cast<std::size_t>(source_alphabet_))
    throw std::invalid_argument("Morphism: need one image per source letter");
  width_ = images_.front().size();
  for (const Word& image : images_) {
    if (image.size() != width_)
      throw std::invalid_argument("Morphism: images must have equal length");
    for (std::uint8_t s : image.symbols())
      if (s >= target_alphabet_)
        throw std::invalid_argument("Morphism: image symbol outside target alphabet");
  }
}

const Word& Morphism::image(int letter) const {
  if (letter < 0 || letter >= source_alphabet_)
    throw std::invalid_argument("Morphism: letter outside source alphabet");
  return images_[static_cast<std::size_t>(letter)];
}

Word apply(const Morphism& h, const Word& w) {
  std::vector<std::uint8_t> out;
  out.reserve(h.width() * w.size());
  for (std::uint8_t s : w.symbols()) {
    if (s >= h.source_alphabet())
      throw std::invalid_argument("apply: symbol outside source alphabet");
    const Word& image = h.images()[s];
    out.insert(out.end(), image.symbols().begin(), image.symbols().end());
  }
  return Word(std::move(out), h.target_alphabet());
}

Morphism compose(const Morphism& h, const Morphism& g) {
  if (g.target_alphabet() != h.source_alphabet())
    throw std::invalid_argument("compose: alphabet mismatch");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& image : g.images()) images.push_back(apply(h, image));
  return Morphism(g.source_alphabet(), h.target_alphabet(), std::move(images));
}

const Morphism& theta_morphism() {
  static const Morphism theta(2, 2, {Word::binary("01"), Word::binary("10")});
  return theta;
}

const Morphism& identity_binary_morphism() {
  static const Morphism id(2, 2, {Word::binary("0"), Word::binary("1")});
  return id;
}

Morphism theta_power_morphism(unsigned a) {
  Morphism out = identity_binary_morphism();
  for (unsigned i = 0; i < a; ++i) out = compose(theta_morphism(), out);
  return out;
}

Morphism theorem_phi(const Word& w0, const Word& w1) {
  if (w0 == w1)
    throw std::invalid_argument("theorem_phi: words must be distinct");
  if (w0.size() != w1.size())
    throw std::invalid_argument("theorem_phi: words must have equal length");
  for (const Word* w : {&w0, &w1}) {
    if (w->size() < 9)
      throw std::invalid_argument("theorem_phi: words too short (need length >= 9)");
    if (!w->starts_with(Word::binary("00")) || !w->ends_with(Word::binary("11")))
      throw std::invalid_argument("theorem_phi: words must match 00...11");
    if (!is_cubefree(*w))
      throw std::invalid_argument("theorem_phi: words must be cubefree");
  }

  const Word tail = Word::binary("010");
  std::vector<Word> images{strip_suffix(theta(w0), tail),
                           strip_suffix(theta(w1), tail)};
  for (const Word& image : images) {
    ensure(image.size() == 2 * w0.size() - 3, "theorem_phi: wrong image width");
    ensure(image.starts_with(Word::binary("01011")),
           "theorem_phi: image lacks prefix 01011");
    ensure(image.ends_with(Word::binary("11")),
           "theorem_phi: image lacks suffix 11");
  }
  Morphism phi(2, 2, std::move(images));
  ensure(keranen_check(phi).passed(), "theorem_phi: cubefreeness check failed");
  return phi;
}

Morphism corollary_build(std::size_t k) {
  Morphism result = [&]() -> Morphism {
    switch (k) {
      case 0:
        return Morphism(2, 2, {Word::binary(""), Word::binary("")});
      case 1:
        return identity_binary_morphism();
      case 3:
        return Morphism(2, 2, {Word::binary("001"), Word::binary("011")});
      case 5:
        return Morphism(2, 2, {Word::binary("01001"), Word::binary("10110")});
      case 7:
        return Morphism(2, 2,
                        {Word::binary("0010011"), Word::binary("0011011")});
      case 9:
        return compose(corollary_build(3), corollary_build(3));
      case 11:
        return Morphism(
            2, 2, {Word::binary("00101001011"), Word::binary("00101001101")});
      case 13:
        return Morphism(2, 2, {Word::binary("0010010110011"),
                               Word::binary("0010011001011")});
      default:
        break;
    }
    if (k % 2 == 1) {
      // Odd k >= 15: witness pair of length (k+3)/2 gives width k.
      WitnessPair pair = lemma3_witnesses((k + 3) / 2);
      return theorem_phi(pair.first, pair.second);
    }
    // Even k = 2^a * m with m odd.
    unsigned a = 0;
    std::size_t m = k;
    while (m % 2 == 0) {
      ++a;
      m /= 2;
    }
    if (m == 1) return theta_power_morphism(a);
    return compose(theta_power_morphism(a), corollary_build(m));
  }();

  ensure(result.width() == k, "corollary_build: wrong width");
  ensure(keranen_check(result).passed(),
         "corollary_build: cubefreeness check failed");
  return result;
}

Word iterate_prefix(const Morphism& h, std::uint8_t seed, std::size_t n) {
  if (!h.is_binary())
    throw std::invalid_argument("iterate_prefix: morphism must be binary");
  if (seed >= 2)
    throw std::invalid_argument("iterate_prefix: seed must be 0 or 1");
  Word w = Word::single(seed, 2);
  if (!h.image(seed).starts_with(w))
    throw std::invalid_argument("iterate_prefix: morphism not prolongable on seed");
  while (w.size() < n) {
    Word next = apply(h, w);
    if (next.size() <= w.size())
      throw std::invalid_argument("iterate_prefix: morphism not prolongable on seed");
    w = std::move(next);
  }
  return w.subword(0, n);
}

std::string to_json(const Morphism& h) {
  nlohmann::ordered_json doc;
  doc["source_alphabet"] = h.source_alphabet();
  doc["target_alphabet"] = h.target_alphabet();
  doc["width"] = h.width();
  nlohmann::ordered_json images = nlohmann::ordered_json::object();
  for (int letter = 0; letter < h.source_alphabet(); ++letter)
    images[std::string(1, static_cast<char>('0' + letter))] =
        h.image(letter).str();
  doc["images"] = std::move(images);
  return doc.dump(2) + "\n";
}

Morphism morphism_from_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("morphism file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("source_alphabet") ||
      !doc.contains("target_alphabet") || !doc.contains("width") ||
      !doc.contains("images"))
    throw std::invalid_argument("morphism file: missing required field");

  const int source = doc["source_alphabet"].get<int>();
  const int target = doc["target_alphabet"].get<int>();
  const auto width = doc["width"].get<std::size_t>();
  std::vector<Word> images;
  for (int letter = 0; letter < source; ++letter) {
    const std::string key(1, static_cast<char>('0' + letter));
    if (!doc["images"].contains(key))
      throw std::invalid_argument("morphism file: missing image for letter " + key);
    images.push_back(Word::parse(doc["images"][key].get<std::string>(), target));
  }
  Morphism h(source, target, std::move(images));
  if (h.width() != width)
    throw std::invalid_argument("morphism file: width field disagrees with images");
  return h;
}

Morphism load_morphism(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open morphism file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return morphism_from_json(buf.str());
}

void save_morphism(const Morphism& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write morphism file: " + path);
  out << to_json(h);
}

}  // namespace cfm
