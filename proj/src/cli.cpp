#include "thetapath/cli.hpp"

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetapath/bijection.hpp"
#include "thetapath/common.hpp"
#include "thetapath/counting.hpp"
#include "thetapath/path.hpp"
#include "thetapath/tableau.hpp"
#include "thetapath/verify.hpp"

namespace thetapath {

namespace {

std::string trimmed(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

// Streams objects line by line: '#' comments are skipped, 'n=<k>' headers
// set the expected n for the lines that follow, everything else is parsed
// as a tableau or path according to the map's domain.
int run_map(BijectionId id, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<int> expected_n;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = trimmed(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      try {
        std::size_t used = 0;
        const int n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2 || n < 0) throw std::invalid_argument(line);
        expected_n = n;
      } catch (const std::exception&) {
        err << "line " << line_number << ": bad header '" << line << "'\n";
        return kExitData;
      }
      continue;
    }
    try {
      MapInput object = tableau_domain(id) ? MapInput(StandardTableau::parse(line))
                                           : MapInput(LatticePath::parse(line));
      const int n = std::holds_alternative<StandardTableau>(object)
                        ? std::get<StandardTableau>(object).n()
                        : std::get<LatticePath>(object).n();
      if (expected_n && n != *expected_n) {
        err << "line " << line_number << ": object has n=" << n << " in a section declaring n="
            << *expected_n << '\n';
        return kExitData;
      }
      const MapOutput image = apply_map(id, object);
      if (const auto* tableau = std::get_if<StandardTableau>(&image)) {
        out << tableau->to_text() << '\n';
      } else if (const auto* path = std::get_if<LatticePath>(&image)) {
        out << path->word() << '\n';
      } else {
        out << std::get<StepWord>(image) << '\n';
      }
    } catch (const std::invalid_argument& e) {
      err << "line " << line_number << ": " << e.what() << '\n';
      return kExitData;
    }
  }
  return kExitOk;
}

int run_figure1(const std::string& file, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> pairs;
  if (file.empty()) {
    for (const auto& [tableau, word] : figure1_fixture()) {
      pairs.emplace_back(std::string(tableau), std::string(word));
    }
  } else {
    std::ifstream stream(file);
    if (!stream) {
      err << "cannot open " << file << '\n';
      return kExitData;
    }
    try {
      pairs = parse_figure1_tsv(stream);
    } catch (const std::invalid_argument& e) {
      err << file << ": " << e.what() << '\n';
      return kExitData;
    }
  }

  int matches = 0;
  std::set<std::string> listed;
  for (const auto& [tableau_text, expected] : pairs) {
    std::string status;
    try {
      const StandardTableau tableau = StandardTableau::parse(tableau_text);
      listed.insert(tableau.to_text());
      const std::string got = psi(tableau).word();
      if (got == expected) {
        ++matches;
        status = "ok";
      } else {
        status = "got " + got;
      }
    } catch (const std::invalid_argument& e) {
      status = std::string("bad tableau (") + e.what() + ")";
    }
    out << tableau_text << '\t' << expected << '\t' << status << '\n';
  }

  std::set<std::string> family;
  for (const StandardTableau& tableau : enumerate_tableaux(1)) family.insert(tableau.to_text());
  const bool family_ok = family == listed;
  const bool pass = family_ok && matches == static_cast<int>(pairs.size()) && !pairs.empty();
  out << "matches\t" << matches << '/' << pairs.size() << '\n';
  out << "family\t" << (family_ok ? "ok" : "mismatch") << '\n';
  out << "overall\t" << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quadrant lattice paths, standard Young tableaux of the theta shapes,\n"
               "and the explicit bijections between them."};
  app.require_subcommand(1);

  int n = 0;
  int n_max = 4;
  std::size_t cap = kDefaultEnumerationCap;
  std::string via;
  std::string input_file;
  std::string format = "text";
  std::string path_word;
  std::string tableau_text;
  std::string fixture_file;
  bool all_routes = false;
  bool formulas_only = false;
  bool timings = false;

  const std::vector<std::string> map_names = {"psi",   "phi",  "xi",         "xi-inv",
                                              "psi-t", "xi-t", "psi-swapped"};

  auto* count = app.add_subcommand("count", "Print the number of paths (equally, tableaux)");
  count->add_option("--n", n, "Size parameter")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--all-routes", all_routes, "Report every counting route, not just the number");
  count->add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "machine"}));

  auto* gen_paths = app.add_subcommand("gen-paths", "List every path at n, one word per line");
  gen_paths->add_option("--n", n, "Size parameter")->required()->check(CLI::NonNegativeNumber);
  gen_paths->add_option("--cap", cap, "Refuse to enumerate families larger than this");

  auto* gen_syt = app.add_subcommand("gen-syt", "List every tableau at n, one per line");
  gen_syt->add_option("--n", n, "Size parameter")->required()->check(CLI::NonNegativeNumber);
  gen_syt->add_option("--cap", cap, "Refuse to enumerate families larger than this");

  auto* map = app.add_subcommand("map", "Apply a named map to each object read from the input");
  map->add_option("--via", via, "Map name")->required()->check(CLI::IsMember(map_names));
  map->add_option("--input", input_file, "Read objects from this file instead of stdin");

  auto* verify = app.add_subcommand("verify", "Check every map exhaustively for n = 0..n-max");
  verify->add_option("--n-max", n_max, "Largest n to verify")->check(CLI::NonNegativeNumber);
  verify->add_option("--cap", cap, "Refuse to enumerate families larger than this");
  verify->add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "machine"}));
  verify->add_flag("--timings", timings, "Include per-check wall times (not byte-reproducible)");

  auto* cross = app.add_subcommand("cross-check", "Compare all counting routes at one n");
  cross->add_option("--n", n, "Size parameter")->required()->check(CLI::NonNegativeNumber);
  cross->add_flag("--formulas-only", formulas_only, "Skip enumeration; compare formulas only");
  cross->add_option("--cap", cap, "Refuse to enumerate families larger than this");
  cross->add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "machine"}));

  auto* render = app.add_subcommand("render", "Draw one object as ASCII art");
  auto* render_path = render->add_option("--path", path_word, "Step word to draw");
  auto* render_tableau = render->add_option("--tableau", tableau_text, "Tableau to draw");
  render_path->excludes(render_tableau);
  render->require_option(1);

  auto* figure1 = app.add_subcommand(
      "figure1", "Print the 16 reference pairs at n = 1 and check them against psi");
  figure1->add_option("--file", fixture_file, "Check this tableau<TAB>word file instead of the"
                                              " built-in table");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      if (!all_routes) {
        out << count_paths_closed_form(n) << '\n';
        return kExitOk;
      }
      const CountReport report = cross_check(n, false);
      out << (format == "machine" ? to_machine(report) : to_text(report));
      return report.consistent ? kExitOk : kExitVerifyFailed;
    }
    if (gen_paths->parsed()) {
      for (const LatticePath& path : enumerate_paths(n, cap)) out << path.word() << '\n';
      return kExitOk;
    }
    if (gen_syt->parsed()) {
      out << "n=" << n << '\n';
      for (const StandardTableau& tableau : enumerate_tableaux(n, cap)) {
        out << tableau.to_text() << '\n';
      }
      return kExitOk;
    }
    if (map->parsed()) {
      const BijectionId id = *bijection_from_name(via);
      if (input_file.empty()) return run_map(id, in, out, err);
      std::ifstream file(input_file);
      if (!file) {
        err << "cannot open " << input_file << '\n';
        return kExitData;
      }
      return run_map(id, file, out, err);
    }
    if (verify->parsed()) {
      const AggregateReport report = verify_all(n_max, cap);
      if (format == "machine") {
        render_machine(out, report);
      } else {
        render_text(out, report, timings);
      }
      return report.pass ? kExitOk : kExitVerifyFailed;
    }
    if (cross->parsed()) {
      const CountReport report = cross_check(n, !formulas_only, cap);
      out << (format == "machine" ? to_machine(report) : to_text(report));
      return report.consistent ? kExitOk : kExitVerifyFailed;
    }
    if (render->parsed()) {
      try {
        if (!path_word.empty()) {
          out << render_path_text(LatticePath::parse(path_word));
        } else {
          out << render_tableau_text(StandardTableau::parse(tableau_text));
        }
      } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitData;
      }
      return kExitOk;
    }
    if (figure1->parsed()) {
      return run_figure1(fixture_file, out, err);
    }
  } catch (const resource_limit_error& e) {
    err << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace thetapath
