#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfm/morphism.hpp"
#include "cfm/search.hpp"
#include "cfm/thue_morse.hpp"
#include "cfm/witnesses.hpp"

namespace cfm::cli {
namespace {

std::string format_name(Format f) { return f == Format::plain ? "plain" : "json"; }

Word parse_word_arg(const std::string& text) {
  const bool ternary = text.find('2') != std::string::npos;
  return Word::parse(text, ternary ? 3 : 2);
}

void print_verdict(std::ostream& out, const std::string& label,
                   const Verdict& v) {
  out << label << ": " << (v.passed() ? "pass" : "fail") << "\n";
  if (!v.passed()) {
    const Counterexample& cx = *v.counterexample();
    out << "counterexample: input=" << cx.input.str()
        << " image=" << cx.image.str() << " " << repetition_name(cx.kind)
        << "=(" << cx.start << ", " << cx.period << ")\n";
  }
}

int run_build(const Command& cmd, std::ostream& out) {
  Morphism h = corollary_build(cmd.k);
  Verdict v = keranen_check(h);
  if (cmd.format == Format::json) {
    out << to_json(h);
  } else {
    for (int letter = 0; letter < h.source_alphabet(); ++letter)
      out << letter << " -> " << h.image(letter).str() << "\n";
    if (v.passed())
      out << "verified: keranen pass\n";
    else
      print_verdict(out, "verified: keranen", v);
  }
  return v.passed() ? 0 : 1;
}

int run_verify(const Command& cmd, std::ostream& out) {
  Morphism h = load_morphism(cmd.file);
  std::string criterion;
  Verdict v = Verdict::pass();
  Verdict brute = Verdict::pass();
  if (h.is_binary()) {
    criterion = "keranen";
    v = keranen_check(h);
    if (cmd.brute_len) brute = brute_check_cubefree(h, *cmd.brute_len);
  } else if (h.is_ternary()) {
    criterion = "squarefree-criterion";
    v = squarefree_uniform_check(h);
    if (cmd.brute_len) brute = brute_check_squarefree(h, *cmd.brute_len);
  } else {
    throw UsageError("verify: unsupported alphabets in " + cmd.file);
  }

  if (cmd.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["criterion"] = criterion;
    doc["criterion_verdict"] = nlohmann::ordered_json::parse(to_json(v));
    if (cmd.brute_len) {
      doc["brute_max_len"] = *cmd.brute_len;
      doc["brute_verdict"] = nlohmann::ordered_json::parse(to_json(brute));
    }
    out << doc.dump(2) << "\n";
  } else {
    print_verdict(out, criterion, v);
    if (cmd.brute_len)
      print_verdict(out, "brute[L=" + std::to_string(*cmd.brute_len) + "]",
                    brute);
  }
  return v.passed() && brute.passed() ? 0 : 1;
}

int run_witness(const Command& cmd, std::ostream& out) {
  std::vector<WitnessPair> pairs;
  switch (cmd.lemma) {
    case 1: {
      Lemma1Witnesses w = lemma1_witnesses(cmd.k);
      pairs = {w.pair_0y0, w.pair_0z1};
      break;
    }
    case 2: {
      Lemma2Witnesses w = lemma2_witnesses(cmd.k);
      pairs = {w.pair_01x01, w.pair_01x10};
      break;
    }
    case 3:
      pairs = {lemma3_witnesses(cmd.k)};
      break;
    default:
      throw UsageError("witness: lemma must be lemma1, lemma2 or lemma3");
  }

  if (cmd.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["lemma"] = cmd.lemma;
    doc["k"] = cmd.k;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const WitnessPair& p : pairs)
      list.push_back({{"form", std::string(form_name(p.form))},
                      {"first", p.first.str()},
                      {"second", p.second.str()}});
    doc["pairs"] = std::move(list);
    out << doc.dump(2) << "\n";
  } else {
    for (const WitnessPair& p : pairs)
      out << form_name(p.form) << ": " << p.first.str() << " "
          << p.second.str() << "\n";
  }
  return 0;
}

int run_tm(const Command& cmd, std::ostream& out) {
  Word prefix = tm_prefix(cmd.n);
  if (cmd.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["n"] = cmd.n;
    doc["word"] = prefix.str();
    out << doc.dump(2) << "\n";
  } else {
    out << prefix.str() << "\n";
  }
  return 0;
}

int run_check(const Command& cmd, std::ostream& out) {
  const Word w = parse_word_arg(cmd.word);
  std::optional<Occurrence> occ;
  switch (cmd.check_kind) {
    case Repetition::cube: occ = find_cube(w); break;
    case Repetition::square: occ = find_square(w); break;
    case Repetition::overlap: occ = find_overlap(w); break;
  }

  if (cmd.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["word"] = cmd.word;
    doc["kind"] = std::string(repetition_name(cmd.check_kind));
    doc["free"] = !occ.has_value();
    if (occ) doc["occurrence"] = {{"start", occ->start}, {"period", occ->period}};
    out << doc.dump(2) << "\n";
  } else {
    if (occ)
      out << "(" << occ->start << ", " << occ->period << ")\n";
    else
      out << "no " << repetition_name(cmd.check_kind) << "\n";
  }
  return occ ? 1 : 0;
}

int run_search(const Command& cmd, std::ostream& out) {
  SearchReport report;
  if (cmd.search_kind == "overlapfree") {
    report = search_overlapfree_uniform(cmd.width, cmd.force);
  } else if (cmd.search_kind == "squarefree3") {
    report = search_squarefree_ternary_uniform(cmd.width, cmd.first, cmd.force);
  } else if (cmd.search_kind == "cubefree-census") {
    report = census_cubefree_uniform(cmd.width, cmd.force);
  } else {
    throw UsageError("search: unknown kind '" + cmd.search_kind + "'");
  }
  if (!cmd.csv_path.empty()) append_csv(report, cmd.csv_path);
  out << (cmd.format == Format::json ? to_json(report) : to_plain(report));
  return 0;
}

int run_expand(const Command& cmd, std::ostream& out) {
  Morphism h = load_morphism(cmd.file);
  if (cmd.iterate && (cmd.seed < 0 || cmd.seed > 1))
    throw UsageError("expand: seed must be 0 or 1");
  Word result = cmd.iterate
                    ? iterate_prefix(h, static_cast<std::uint8_t>(cmd.seed),
                                     cmd.iterate_n)
                    : apply(h, Word::parse(cmd.word, h.source_alphabet()));
  if (cmd.format == Format::json) {
    nlohmann::ordered_json doc;
    doc["word"] = result.str();
    out << doc.dump(2) << "\n";
  } else {
    out << result.str() << "\n";
  }
  return 0;
}

}  // namespace

std::vector<std::string> Command::canonical_args() const {
  std::vector<std::string> args;
  switch (kind) {
    case Kind::build:
      args = {"build", std::to_string(k)};
      break;
    case Kind::verify:
      args = {"verify", file};
      if (brute_len) {
        args.push_back("--brute");
        args.push_back(std::to_string(*brute_len));
      }
      break;
    case Kind::witness:
      args = {"witness", "lemma" + std::to_string(lemma), std::to_string(k)};
      break;
    case Kind::tm:
      args = {"tm", std::to_string(n)};
      break;
    case Kind::check:
      args = {"check", "--" + std::string(repetition_name(check_kind)), word};
      break;
    case Kind::search:
      args = {"search", search_kind, std::to_string(width)};
      if (first) args.push_back("--first");
      if (force) args.push_back("--force");
      if (!csv_path.empty()) {
        args.push_back("--csv");
        args.push_back(csv_path);
      }
      break;
    case Kind::expand:
      args = {"expand", file};
      if (iterate) {
        args.push_back("--iterate");
        args.push_back(std::to_string(seed));
        args.push_back(std::to_string(iterate_n));
      } else {
        args.push_back(word);
      }
      break;
  }
  args.push_back("--format");
  args.push_back(format_name(format));
  return args;
}

Command parse_command(const std::vector<std::string>& args) {
  Command cmd;
  std::string format_text = "plain";
  std::string lemma_text;
  bool flag_cube = false, flag_square = false, flag_overlap = false;
  std::vector<std::string> iterate_args;

  CLI::App app{"k-uniform cubefree binary morphisms: construction, "
               "verification, witnesses and exhaustive searches"};
  app.name("cfm");
  app.require_subcommand(1);
  // --format is accepted by every subcommand.
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"plain", "json"}));
  };

  CLI::App* build = app.add_subcommand(
      "build", "construct a k-uniform cubefree binary morphism");
  build->add_option("k", cmd.k, "image width")->required();
  add_format(build);

  CLI::App* verify =
      app.add_subcommand("verify", "check a morphism file for cubefreeness "
                                   "(binary) or squarefreeness (ternary)");
  verify->add_option("file", cmd.file, "morphism JSON file")->required();
  std::size_t brute_value = 0;
  CLI::Option* brute_opt = verify->add_option(
      "--brute", brute_value, "also run the exhaustive oracle up to length L");
  add_format(verify);

  CLI::App* witness = app.add_subcommand(
      "witness", "produce the constructive witness pairs of length k");
  witness->add_option("lemma", lemma_text, "lemma1, lemma2 or lemma3")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3"}));
  witness->add_option("k", cmd.k, "witness length")->required();
  add_format(witness);

  CLI::App* tm =
      app.add_subcommand("tm", "print the length-n Thue-Morse prefix");
  tm->add_option("n", cmd.n, "prefix length")->required();
  add_format(tm);

  CLI::App* check =
      app.add_subcommand("check", "test a word for a repetition");
  check->add_flag("--cube", flag_cube, "look for a cube");
  check->add_flag("--square", flag_square, "look for a square");
  check->add_flag("--overlap", flag_overlap, "look for an overlap");
  check->add_option("word", cmd.word, "word over {0,1,2}")->required();
  add_format(check);

  CLI::App* search =
      app.add_subcommand("search", "exhaustive search over uniform morphisms");
  search->add_option("kind", cmd.search_kind, "search kind")
      ->required()
      ->check(CLI::IsMember({"overlapfree", "squarefree3", "cubefree-census"}));
  search->add_option("width", cmd.width, "image width")->required();
  search->add_flag("--first", cmd.first, "stop at the first verified find");
  search->add_flag("--force", cmd.force, "override the width budget guard");
  search->add_option("--csv", cmd.csv_path, "append a census row to this file");
  add_format(search);

  CLI::App* expand = app.add_subcommand(
      "expand", "apply a morphism file to a word, or iterate it from a seed");
  expand->add_option("file", cmd.file, "morphism JSON file")->required();
  CLI::Option* word_opt =
      expand->add_option("word", cmd.word, "word over the source alphabet");
  CLI::Option* iterate_opt =
      expand->add_option("--iterate", iterate_args,
                         "seed letter and prefix length n")
          ->expected(2);
  add_format(expand);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (const CLI::App* sub : app.get_subcommands()) text = sub->help();
    throw HelpRequested{std::move(text)};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (build->parsed()) cmd.kind = Command::Kind::build;
  if (verify->parsed()) {
    cmd.kind = Command::Kind::verify;
    if (*brute_opt) cmd.brute_len = brute_value;
  }
  if (witness->parsed()) {
    cmd.kind = Command::Kind::witness;
    cmd.lemma = lemma_text.back() - '0';
  }
  if (tm->parsed()) cmd.kind = Command::Kind::tm;
  if (check->parsed()) {
    cmd.kind = Command::Kind::check;
    if (flag_cube + flag_square + flag_overlap != 1)
      throw UsageError("check: exactly one of --cube, --square, --overlap");
    cmd.check_kind = flag_cube ? Repetition::cube
                     : flag_square ? Repetition::square
                                   : Repetition::overlap;
  }
  if (search->parsed()) {
    cmd.kind = Command::Kind::search;
    if (cmd.first && cmd.search_kind != "squarefree3")
      throw UsageError("search: --first applies to squarefree3 only");
  }
  if (expand->parsed()) {
    cmd.kind = Command::Kind::expand;
    const bool has_word = word_opt->count() > 0;
    const bool has_iterate = iterate_opt->count() > 0;
    if (has_word == has_iterate)
      throw UsageError("expand: give either a word or --iterate seed n");
    if (has_iterate) {
      cmd.iterate = true;
      try {
        cmd.seed = std::stoi(iterate_args[0]);
        cmd.iterate_n = std::stoull(iterate_args[1]);
      } catch (const std::exception&) {
        throw UsageError("expand: --iterate expects numeric seed and length");
      }
    }
  }
  cmd.format = format_text == "json" ? Format::json : Format::plain;
  return cmd;
}

int run_command(const Command& cmd, std::ostream& out) {
  switch (cmd.kind) {
    case Command::Kind::build: return run_build(cmd, out);
    case Command::Kind::verify: return run_verify(cmd, out);
    case Command::Kind::witness: return run_witness(cmd, out);
    case Command::Kind::tm: return run_tm(cmd, out);
    case Command::Kind::check: return run_check(cmd, out);
    case Command::Kind::search: return run_search(cmd, out);
    case Command::Kind::expand: return run_expand(cmd, out);
  }
  throw UsageError("unknown command");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_command(parse_command(args), out);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cfm::cli
