#include "thetapath/verify.hpp"

#include <chrono>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetapath {

namespace {

std::string output_text(const MapOutput& out) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, StandardTableau>) {
          return value.to_text();
        } else if constexpr (std::is_same_v<T, LatticePath>) {
          return value.word();
        } else {
          return value;
        }
      },
      out);
}

// Only called on outputs already known to be valid objects.
MapInput output_as_input(const MapOutput& out, int n) {
  if (const auto* tableau = std::get_if<StandardTableau>(&out)) return *tableau;
  if (const auto* path = std::get_if<LatticePath>(&out)) return *path;
  return LatticePath(std::get<StepWord>(out), n);
}

void add_failure(VerificationReport& report, std::string witness) {
  if (report.failures.size() < kMaxWitnesses) report.failures.push_back(std::move(witness));
}

}  // namespace

VerificationReport verify_bijection(BijectionId forward, std::optional<BijectionId> inverse,
                                    int n, std::size_t cap) {
  if (inverse) {
    if (forward == BijectionId::psi_swapped) {
      throw std::invalid_argument("psi-swapped has no inverse");
    }
    if (tableau_domain(*inverse) == tableau_domain(forward)) {
      throw std::invalid_argument("inverse must map in the opposite direction");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.map_name = bijection_name(forward);
  report.n = n;

  std::vector<MapInput> domain;
  std::vector<MapInput> codomain;
  const auto tableaux = enumerate_tableaux(n, cap);
  const auto paths = enumerate_paths(n, cap);
  if (tableau_domain(forward)) {
    domain.assign(tableaux.begin(), tableaux.end());
    codomain.assign(paths.begin(), paths.end());
  } else {
    domain.assign(paths.begin(), paths.end());
    codomain.assign(tableaux.begin(), tableaux.end());
  }
  report.domain_size = domain.size();
  report.codomain_size = codomain.size();

  const auto input_text = [](const MapInput& object) {
    if (const auto* tableau = std::get_if<StandardTableau>(&object)) return tableau->to_text();
    return std::get<LatticePath>(object).word();
  };

  // First sweep: image validity, injectivity and domain-side round trips,
  // witnessed in enumeration order.
  std::map<std::string, std::string> preimage_of;
  for (const MapInput& object : domain) {
    const std::string from = input_text(object);
    std::string image;
    bool valid = false;
    MapOutput out{StepWord{}};
    try {
      out = apply_map(forward, object);
      image = output_text(out);
      if (const auto* word = std::get_if<StepWord>(&out)) {
        const PathVerdict verdict = validate_path(*word, n);
        valid = verdict.ok();
        if (!valid) {
          add_failure(report, "invalid image: " + from + " -> " + image + " (" +
                                  verdict.description() + ")");
        }
      } else {
        valid = true;
      }
    } catch (const std::exception& e) {
      add_failure(report, "image rejected: " + from + " (" + e.what() + ")");
    }
    if (!valid) continue;
    ++report.image_valid_count;

    const auto [it, inserted] = preimage_of.emplace(image, from);
    if (!inserted) {
      add_failure(report, "collision: " + it->second + " and " + from + " -> " + image);
    }

    if (inverse) {
      const std::string back = output_text(apply_map(*inverse, output_as_input(out, n)));
      if (back != from) {
        add_failure(report, "round trip: " + from + " -> " + image + " -> " + back);
      }
    }
  }
  report.distinct_image_count = preimage_of.size();

  // Second sweep: surjectivity and codomain-side round trips.
  for (const MapInput& object : codomain) {
    const std::string target = input_text(object);
    if (!preimage_of.count(target)) {
      add_failure(report, "not reached: " + target);
    }
    if (inverse) {
      const MapOutput mid = apply_map(*inverse, object);
      const std::string again = output_text(apply_map(forward, output_as_input(mid, n)));
      if (again != target) {
        add_failure(report,
                    "round trip: " + target + " -> " + output_text(mid) + " -> " + again);
      }
    }
  }

  report.pass = report.failures.empty() && report.image_valid_count == report.domain_size &&
                report.distinct_image_count == report.domain_size &&
                report.domain_size == report.codomain_size;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::array<Figure1Pair, 16>& figure1_fixture() {
  // Reference data, transcribed by hand and kept frozen; the tests compare
  // the library against it, never the other way around.
  static const std::array<Figure1Pair, 16> table = {{
      {"123/45/6", "ENSN"},
      {"123/46/5", "ENNS"},
      {"124/35/6", "NESN"},
      {"124/36/5", "NENS"},
      {"125/34/6", "NSEN"},
      {"126/34/5", "NSNE"},
      {"125/36/4", "NNES"},
      {"126/35/4", "NNSE"},
      {"134/25/6", "EEWN"},
      {"134/26/5", "EENW"},
      {"135/24/6", "EWEN"},
      {"136/24/5", "EWNE"},
      {"135/26/4", "ENEW"},
      {"136/25/4", "ENWE"},
      {"145/26/3", "NEEW"},
      {"146/25/3", "NEWE"},
  }};
  return table;
}

std::vector<std::pair<std::string, std::string>> parse_figure1_tsv(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  int line_number = 0;
  const auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected tableau<TAB>word");
    }
    std::string tableau = trim(line.substr(0, tab));
    std::string word = trim(line.substr(tab + 1));
    if (tableau.empty() || word.empty() || word.find('\t') != std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected tableau<TAB>word");
    }
    pairs.emplace_back(std::move(tableau), std::move(word));
  }
  return pairs;
}

Figure1Report reproduce_figure1() {
  Figure1Report report;
  std::set<std::string> fixture_tableaux;
  for (const auto& [tableau_text, expected] : figure1_fixture()) {
    const StandardTableau tableau = StandardTableau::parse(std::string(tableau_text));
    fixture_tableaux.insert(tableau.to_text());
    const std::string got = psi(tableau).word();
    if (got == expected) {
      ++report.matches;
    } else {
      report.diffs.push_back(std::string(tableau_text) + ": expected " + std::string(expected) +
                             ", got " + got);
    }
  }
  std::set<std::string> enumerated;
  for (const StandardTableau& tableau : enumerate_tableaux(1)) {
    enumerated.insert(tableau.to_text());
  }
  report.enumeration_matches = enumerated == fixture_tableaux;
  if (!report.enumeration_matches) {
    report.diffs.push_back("enumerated family at n=1 differs from the reference set");
  }
  report.pass = report.matches == static_cast<int>(figure1_fixture().size()) &&
                report.enumeration_matches;
  return report;
}

NegativeControlReport psi_swapped_control(int n, std::size_t cap) {
  NegativeControlReport report;
  report.n = n;
  for (const StandardTableau& tableau : enumerate_tableaux(n, cap)) {
    ++report.domain_size;
    const StepWord word = psi_swapped(tableau);
    const PathVerdict verdict = validate_path(word, n);
    if (verdict.ok()) continue;
    ++report.invalid_image_count;
    if (verdict.violation == PathViolation::leaves_quadrant) {
      ++report.leaves_quadrant_count;
      if (report.witness.empty()) {
        report.witness = tableau.to_text() + " -> " + word + " (" + verdict.description() + ")";
      }
    }
  }
  report.failed_as_expected = report.leaves_quadrant_count > 0;
  return report;
}

AggregateReport verify_all(int n_max, std::size_t cap) {
  AggregateReport report;
  report.n_max = n_max;
  bool ok = true;
  for (int n = 0; n <= n_max; ++n) {
    report.bijections.push_back(verify_bijection(BijectionId::psi, BijectionId::phi, n, cap));
    report.bijections.push_back(verify_bijection(BijectionId::xi, BijectionId::xi_inv, n, cap));
    report.bijections.push_back(verify_bijection(BijectionId::psi_t, std::nullopt, n, cap));
    report.bijections.push_back(verify_bijection(BijectionId::xi_t, std::nullopt, n, cap));
    report.counts.push_back(cross_check(n, true, cap));
    report.controls.push_back(psi_swapped_control(n, cap));
  }
  for (const VerificationReport& r : report.bijections) ok = ok && r.pass;
  for (const CountReport& r : report.counts) ok = ok && r.consistent;
  for (const NegativeControlReport& r : report.controls) {
    if (r.n >= 1) ok = ok && r.failed_as_expected;
  }
  report.pass = ok;
  return report;
}

void render_text(std::ostream& out, const AggregateReport& report, bool timings) {
  out << "bijection checks\n";
  out << "  map          n    domain  codomain     valid  distinct  result\n";
  for (const VerificationReport& r : report.bijections) {
    out << "  " << std::left << std::setw(11) << r.map_name << std::right << std::setw(3) << r.n
        << std::setw(10) << r.domain_size << std::setw(10) << r.codomain_size << std::setw(10)
        << r.image_valid_count << std::setw(10) << r.distinct_image_count << "  "
        << (r.pass ? "pass" : "FAIL");
    if (timings) {
      out << "  " << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s"
          << std::defaultfloat;
    }
    out << '\n';
    for (const std::string& witness : r.failures) {
      out << "      ! " << witness << '\n';
    }
  }

  out << "count cross-checks\n";
  out << "    n    closed-paths  closed-tableaux      hook-length      enum-paths   enum-tableaux"
         "  consistent\n";
  for (const CountReport& r : report.counts) {
    const auto cell = [](const std::optional<BigInt>& value) {
      return value ? value->str() : std::string("-");
    };
    out << "  " << std::setw(3) << r.n << std::setw(16) << r.closed_form_paths.str()
        << std::setw(17) << r.closed_form_tableaux.str() << std::setw(17) << r.hook_length.str()
        << std::setw(16) << cell(r.enumerated_paths) << std::setw(16)
        << cell(r.enumerated_tableaux) << "  " << (r.consistent ? "yes" : "NO") << '\n';
  }

  out << "negative control (psi-swapped)\n";
  out << "    n    domain   invalid    leaves  outcome\n";
  for (const NegativeControlReport& r : report.controls) {
    out << "  " << std::setw(3) << r.n << std::setw(10) << r.domain_size << std::setw(10)
        << r.invalid_image_count << std::setw(10) << r.leaves_quadrant_count << "  "
        << (r.failed_as_expected ? "rejected" : "NOT REJECTED") << '\n';
    if (!r.witness.empty()) {
      out << "      first: " << r.witness << '\n';
    }
  }

  out << "overall " << (report.pass ? "PASS" : "FAIL") << '\n';
}

void render_machine(std::ostream& out, const AggregateReport& report) {
  for (const VerificationReport& r : report.bijections) {
    out << "bijection\t" << r.map_name << '\t' << r.n << '\t' << r.domain_size << '\t'
        << r.codomain_size << '\t' << r.image_valid_count << '\t' << r.distinct_image_count
        << '\t' << (r.pass ? "pass" : "fail") << '\n';
  }
  for (const CountReport& r : report.counts) {
    out << "counts\t" << to_machine(r);
  }
  for (const NegativeControlReport& r : report.controls) {
    out << "control\t" << r.n << '\t' << r.domain_size << '\t' << r.invalid_image_count << '\t'
        << r.leaves_quadrant_count << '\t' << (r.witness.empty() ? "-" : r.witness) << '\t'
        << (r.failed_as_expected ? "yes" : "no") << '\n';
  }
  out << "overall\t" << (report.pass ? "pass" : "fail") << '\n';
}

}  // namespace thetapath
