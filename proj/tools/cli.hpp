#pragma once

// Command-line front end. Parsing produces a Command value that round-trips
// to a canonical argument vector; dispatch is a thin adapter over the
// library, so every output is the serialization of a library result.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfm/verification.hpp"

namespace cfm::cli {

enum class Format { plain, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_command when --help is requested; run() prints the text
/// and exits 0.
struct HelpRequested {
  std::string text;
};

struct Command {
  enum class Kind { build, verify, witness, tm, check, search, expand };

  Kind kind = Kind::build;
  Format format = Format::plain;

  std::uint64_t k = 0;                  // build
  std::string file;                     // verify / expand
  std::optional<std::size_t> brute_len; // verify --brute
  int lemma = 1;                        // witness
  std::uint64_t n = 0;                  // tm
  Repetition check_kind = Repetition::cube;  // check
  std::string word;                     // check / expand
  std::string search_kind;              // search: overlapfree | squarefree3 | cubefree-census
  std::size_t width = 0;                // search
  bool first = false;                   // search --first
  bool force = false;                   // search --force
  std::string csv_path;                 // search --csv
  bool iterate = false;                 // expand --iterate
  int seed = 0;                         // expand --iterate seed
  std::uint64_t iterate_n = 0;          // expand --iterate n

  /// The canonical argument vector; parsing it yields an equal Command.
  std::vector<std::string> canonical_args() const;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Throws UsageError on bad arguments.
Command parse_command(const std::vector<std::string>& args);

/// Exit status 0 = success, 1 = verification failure, 2 = usage error.
int run_command(const Command& cmd, std::ostream& out);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cfm::cli
