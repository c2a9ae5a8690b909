#pragma once

// Exhaustive desk-scale searches over uniform morphisms: the overlap-free
// binary census (nonempty exactly at power-of-two widths), the cubefree
// binary census (nonempty at every width), and the squarefree ternary
// existence search (first hit at width 11).
//
// Parallelism contract: the candidate space is split into a fixed number of
// contiguous lexicographic blocks, workers process blocks independently, and
// results are merged in block order -- reports are identical to a sequential
// run. Searches that stop at the first find scan blocks in order on a single
// worker so the halting point, and with it every reported count, stays
// deterministic.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfm/morphism.hpp"

namespace cfm {

/// Census of one width's search: raw tuple count, the count left after
/// symmetry reduction (equal when no reduction applies), per-filter pruning
/// tallies and every morphism that survived its defining check.
struct SearchReport {
  std::size_t width = 0;
  std::uint64_t candidates_examined = 0;  // before symmetry reduction
  std::uint64_t candidates_canonical = 0; // after symmetry reduction
  std::vector<Morphism> found;
  std::map<std::string, std::uint64_t> pruned_by;
  double seconds = 0.0;
};

/// All binary morphisms of the width whose image of 01101001 is overlap-free,
/// in lexicographic image order. Default width budget 1..10.
SearchReport search_overlapfree_uniform(std::size_t width,
                                        bool override_budget = false);

/// Squarefree ternary morphisms of the width: images drawn from the
/// squarefree words of that length, tuples reduced to canonical
/// representatives under the 6 letter permutations, filtered by border
/// squares and then the length-3 criterion. Default width budget 2..12.
SearchReport search_squarefree_ternary_uniform(std::size_t width,
                                               bool stop_at_first,
                                               bool override_budget = false);

/// All binary morphisms of the width passing the bounded cubefreeness
/// criterion. Default width budget 1..7.
SearchReport census_cubefree_uniform(std::size_t width,
                                     bool override_budget = false);

std::string to_json(const SearchReport& report);
std::string to_plain(const SearchReport& report);

/// Appends one census row (width, examined, found, seconds); writes the
/// header first when the file is new or empty.
void append_csv(const SearchReport& report, const std::string& path);

}  // namespace cfm
