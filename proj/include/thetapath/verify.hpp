#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetapath/bijection.hpp"
#include "thetapath/common.hpp"
#include "thetapath/counting.hpp"

namespace thetapath {

// At most this many witnesses are kept per report, in enumeration order.
inline constexpr std::size_t kMaxWitnesses = 10;

// Machine evidence that a named map is a bijection onto its codomain at a
// fixed n. pass requires every image valid, pairwise distinct, the image
// set equal to the independently enumerated codomain, and (when an inverse
// is supplied) clean round trips in both directions; any defect lands in
// failures as a witness string.
struct VerificationReport {
  std::string map_name;
  int n = 0;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::size_t image_valid_count = 0;
  std::size_t distinct_image_count = 0;
  std::vector<std::string> failures;  // capped at kMaxWitnesses
  bool pass = false;
  double elapsed_seconds = 0.0;
};

// Enumerates domain and codomain independently, maps every domain element
// through forward, and checks validity, distinctness, surjectivity and
// round trips. inverse must map the opposite domain when present, and must
// be absent for psi_swapped; violations throw std::invalid_argument.
VerificationReport verify_bijection(BijectionId forward, std::optional<BijectionId> inverse,
                                    int n, std::size_t cap = kDefaultEnumerationCap);

// The checked-in reference table: the 16 tableaux of shape (3,2,1) with
// their step words, in the fixture's display order. Transcribed by hand;
// nothing in the library regenerates it.
using Figure1Pair = std::pair<std::string_view, std::string_view>;
const std::array<Figure1Pair, 16>& figure1_fixture();

// Parses the on-disk fixture format: one 'tableau<TAB>path' pair per line,
// '#' comments and blank lines ignored.
std::vector<std::pair<std::string, std::string>> parse_figure1_tsv(std::istream& in);

struct Figure1Report {
  int matches = 0;                  // fixture pairs reproduced by psi
  bool enumeration_matches = false; // enumerate_tableaux(1) equals the fixture tableaux
  std::vector<std::string> diffs;
  bool pass = false;
};

// Applies psi to each fixture tableau and compares with the recorded word;
// also checks that the enumerated family SYT(theta(1)) is exactly the
// fixture's set of tableaux.
Figure1Report reproduce_figure1();

// Negative control: psi_swapped is expected to produce, for every n >= 1,
// at least one word that leaves the first quadrant.
struct NegativeControlReport {
  int n = 0;
  std::size_t domain_size = 0;
  std::size_t invalid_image_count = 0;
  std::size_t leaves_quadrant_count = 0;
  std::string witness;  // first leaves-quadrant witness in enumeration order
  bool failed_as_expected = false;
};

NegativeControlReport psi_swapped_control(int n, std::size_t cap = kDefaultEnumerationCap);

struct AggregateReport {
  int n_max = 0;
  std::vector<VerificationReport> bijections;
  std::vector<CountReport> counts;
  std::vector<NegativeControlReport> controls;
  bool pass = false;
};

// Runs psi/phi, xi/xi-inv, psi-t and xi-t plus the exhaustive count
// cross-check for every n <= n_max, and the psi_swapped control (required
// to fail for n >= 1; n = 0 is recorded but not gated).
AggregateReport verify_all(int n_max, std::size_t cap = kDefaultEnumerationCap);

// Human-readable table; timings are opt-in because they vary run to run.
void render_text(std::ostream& out, const AggregateReport& report, bool timings = false);

// Tab-separated records, one per row, first field naming the record kind.
void render_machine(std::ostream& out, const AggregateReport& report);

}  // namespace thetapath
