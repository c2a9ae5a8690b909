#include "cfm/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "cfm/verification.hpp"

namespace cfm {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BlockResult {
  std::uint64_t examined = 0;
  std::uint64_t canonical = 0;
  std::vector<Morphism> found;
  std::map<std::string, std::uint64_t> pruned;
};

void merge_into(SearchReport& report, BlockResult&& block) {
  report.candidates_examined += block.examined;
  report.candidates_canonical += block.canonical;
  for (Morphism& h : block.found) report.found.push_back(std::move(h));
  for (const auto& [key, count] : block.pruned) report.pruned_by[key] += count;
}

// Splits [0, total) into a fixed number of contiguous blocks, runs
// worker(lo, hi) on each (in parallel), and merges results in block order so
// the report is identical to a sequential scan.
template <typename Worker>
void run_blocks(std::uint64_t total, SearchReport& report,
                const Worker& worker) {
  constexpr std::uint64_t kBlocks = 32;
  const std::uint64_t blocks = std::clamp<std::uint64_t>(total, 1, kBlocks);
  std::vector<std::future<BlockResult>> futures;
  futures.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = total / blocks * b + std::min(b, total % blocks);
    const std::uint64_t hi =
        total / blocks * (b + 1) + std::min(b + 1, total % blocks);
    futures.push_back(std::async(std::launch::async,
                                 [lo, hi, &worker] { return worker(lo, hi); }));
  }
  for (auto& future : futures) merge_into(report, future.get());
}

// The binary word whose bits, most significant first, spell out `index`;
// numeric index order equals lexicographic word order.
Word word_of_bits(std::uint64_t index, std::size_t width) {
  std::vector<std::uint8_t> symbols(width);
  for (std::size_t j = 0; j < width; ++j)
    symbols[j] = static_cast<std::uint8_t>((index >> (width - 1 - j)) & 1u);
  return Word(std::move(symbols), 2);
}

}  // namespace

SearchReport search_overlapfree_uniform(std::size_t width,
                                        bool override_budget) {
  if (width < 1 || (width > 10 && !override_budget))
    throw std::domain_error(
        "search_overlapfree_uniform: width out of budget (1..10)");
  const auto start = Clock::now();
  SearchReport report;
  report.width = width;

  const std::uint64_t image_count = std::uint64_t{1} << width;
  std::vector<Word> images;
  std::vector<char> image_overlapfree(image_count);
  images.reserve(image_count);
  for (std::uint64_t i = 0; i < image_count; ++i) {
    images.push_back(word_of_bits(i, width));
    image_overlapfree[i] = is_overlapfree(images.back());
  }

  run_blocks(image_count * image_count, report,
             [&](std::uint64_t lo, std::uint64_t hi) {
               BlockResult block;
               for (std::uint64_t t = lo; t < hi; ++t) {
                 ++block.examined;
                 ++block.canonical;  // no symmetry reduction here
                 const std::uint64_t i0 = t / image_count;
                 const std::uint64_t i1 = t % image_count;
                 // An image with an overlap reappears inside the test image.
                 if (!image_overlapfree[i0] || !image_overlapfree[i1]) {
                   ++block.pruned["image_not_overlapfree"];
                   continue;
                 }
                 Morphism h(2, 2, {images[i0], images[i1]});
                 if (bs_overlap_check(h).passed())
                   block.found.push_back(std::move(h));
                 else
                   ++block.pruned["bs_image_overlap"];
               }
               return block;
             });

  report.seconds = seconds_since(start);
  return report;
}

SearchReport census_cubefree_uniform(std::size_t width, bool override_budget) {
  if (width < 1 || (width > 7 && !override_budget))
    throw std::domain_error("census_cubefree_uniform: width out of budget (1..7)");
  const auto start = Clock::now();
  SearchReport report;
  report.width = width;

  const std::uint64_t image_count = std::uint64_t{1} << width;
  std::vector<Word> images;
  std::vector<char> image_cubefree(image_count);
  images.reserve(image_count);
  for (std::uint64_t i = 0; i < image_count; ++i) {
    images.push_back(word_of_bits(i, width));
    image_cubefree[i] = is_cubefree(images.back());
  }

  run_blocks(image_count * image_count, report,
             [&](std::uint64_t lo, std::uint64_t hi) {
               BlockResult block;
               for (std::uint64_t t = lo; t < hi; ++t) {
                 ++block.examined;
                 ++block.canonical;
                 const std::uint64_t i0 = t / image_count;
                 const std::uint64_t i1 = t % image_count;
                 if (!image_cubefree[i0] || !image_cubefree[i1]) {
                   ++block.pruned["image_not_cubefree"];
                   continue;
                 }
                 Morphism h(2, 2, {images[i0], images[i1]});
                 if (keranen_check(h).passed())
                   block.found.push_back(std::move(h));
                 else
                   ++block.pruned["keranen_fail"];
               }
               return block;
             });

  report.seconds = seconds_since(start);
  return report;
}

SearchReport search_squarefree_ternary_uniform(std::size_t width,
                                               bool stop_at_first,
                                               bool override_budget) {
  if (width < 2 || (width > 12 && !override_budget))
    throw std::domain_error(
        "search_squarefree_ternary_uniform: width out of budget (2..12)");
  const auto start = Clock::now();
  SearchReport report;
  report.width = width;

  // Candidate images: the squarefree ternary words of this length, in
  // lexicographic order.
  const std::vector<Word> cands =
      enumerate_avoidant(3, width, Repetition::square);
  const std::size_t count = cands.size();

  static constexpr std::array<std::array<std::uint8_t, 3>, 6> kPerms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  // perm_index[p][i]: position of the letter-permuted candidate i. Letter
  // permutations preserve squarefreeness, so the lookup always succeeds.
  std::array<std::vector<std::uint32_t>, 6> perm_index;
  for (std::size_t p = 0; p < 6; ++p) {
    perm_index[p].resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::uint8_t> mapped;
      mapped.reserve(width);
      for (std::uint8_t s : cands[i].symbols()) mapped.push_back(kPerms[p][s]);
      const Word image(std::move(mapped), 3);
      const auto it = std::lower_bound(cands.begin(), cands.end(), image);
      ensure(it != cands.end() && *it == image,
             "ternary search: permuted image not squarefree");
      perm_index[p][i] = static_cast<std::uint32_t>(it - cands.begin());
    }
  }

  // pair_ok[i*count+j]: cands[i]cands[j] has no square (border test).
  std::vector<char> pair_ok(count * count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      pair_ok[i * count + j] = is_squarefree(cands[i] + cands[j]);

  const auto scan = [&](std::uint64_t lo, std::uint64_t hi, bool halt_on_find) {
    BlockResult block;
    std::array<std::uint32_t, 3> tuple;
    for (std::uint64_t t = lo; t < hi; ++t) {
      ++block.examined;
      tuple[0] = static_cast<std::uint32_t>(t / (count * count));
      tuple[1] = static_cast<std::uint32_t>(t / count % count);
      tuple[2] = static_cast<std::uint32_t>(t % count);

      // Keep only the lexicographically least tuple of its orbit under
      // simultaneous letter renaming (h -> sigma o h o sigma^-1).
      bool canonical = true;
      for (std::size_t p = 0; p < 6 && canonical; ++p) {
        std::array<std::uint8_t, 3> inverse;
        for (std::uint8_t j = 0; j < 3; ++j) inverse[kPerms[p][j]] = j;
        std::array<std::uint32_t, 3> permuted;
        for (std::size_t a = 0; a < 3; ++a)
          permuted[a] = perm_index[p][tuple[inverse[a]]];
        if (permuted < tuple) canonical = false;
      }
      if (!canonical) {
        ++block.pruned["not_canonical"];
        continue;
      }
      ++block.canonical;

      const bool borders_ok =
          pair_ok[tuple[0] * count + tuple[1]] &&
          pair_ok[tuple[1] * count + tuple[0]] &&
          pair_ok[tuple[0] * count + tuple[2]] &&
          pair_ok[tuple[2] * count + tuple[0]] &&
          pair_ok[tuple[1] * count + tuple[2]] &&
          pair_ok[tuple[2] * count + tuple[1]];
      if (!borders_ok) {
        ++block.pruned["border_square"];
        continue;
      }

      Morphism h(3, 3, {cands[tuple[0]], cands[tuple[1]], cands[tuple[2]]});
      if (squarefree_uniform_check(h).passed()) {
        block.found.push_back(std::move(h));
        if (halt_on_find) break;
      } else {
        ++block.pruned["length3_square"];
      }
    }
    return block;
  };

  const std::uint64_t total =
      static_cast<std::uint64_t>(count) * count * count;
  if (stop_at_first) {
    // Single in-order scan keeps the halting point, and with it all counts,
    // independent of scheduling.
    merge_into(report, scan(0, total, true));
  } else {
    run_blocks(total, report, [&](std::uint64_t lo, std::uint64_t hi) {
      return scan(lo, hi, false);
    });
  }

  report.seconds = seconds_since(start);
  return report;
}

std::string to_plain(const SearchReport& report) {
  std::ostringstream out;
  out << "width: " << report.width << "\n"
      << "examined: " << report.candidates_examined << "\n"
      << "canonical: " << report.candidates_canonical << "\n"
      << "found: " << report.found.size() << "\n";
  for (const Morphism& h : report.found) {
    out << " ";
    for (int letter = 0; letter < h.source_alphabet(); ++letter)
      out << " " << letter << "->" << h.image(letter).str();
    out << "\n";
  }
  out << "pruned:";
  if (report.pruned_by.empty()) out << " none";
  for (const auto& [key, count] : report.pruned_by)
    out << " " << key << "=" << count;
  out << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "seconds: %.6f\n", report.seconds);
  out << buf;
  return out.str();
}

std::string to_json(const SearchReport& report) {
  nlohmann::ordered_json doc;
  doc["width"] = report.width;
  doc["candidates_examined"] = report.candidates_examined;
  doc["candidates_canonical"] = report.candidates_canonical;
  nlohmann::ordered_json found = nlohmann::ordered_json::array();
  for (const Morphism& h : report.found)
    found.push_back(nlohmann::ordered_json::parse(to_json(h)));
  doc["found"] = std::move(found);
  doc["pruned_by"] = report.pruned_by;
  doc["seconds"] = report.seconds;
  return doc.dump(2) + "\n";
}

void append_csv(const SearchReport& report, const std::string& path) {
  bool need_header = true;
  {
    std::ifstream probe(path, std::ios::binary | std::ios::ate);
    if (probe && probe.tellg() > 0) need_header = false;
  }
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::invalid_argument("cannot open csv file: " + path);
  if (need_header) out << "width,examined,found,seconds\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", report.seconds);
  out << report.width << ',' << report.candidates_examined << ','
      << report.found.size() << ',' << buf << "\n";
}

}  // namespace cfm
