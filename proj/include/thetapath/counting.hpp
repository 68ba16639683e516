#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "thetapath/bigint.hpp"
#include "thetapath/common.hpp"

namespace thetapath {

BigInt binomial(int n, int k);

// C(2n,n) * (4n+4)(2n+1) / (n+2), evaluated as an exact integer: the
// numerator is formed first and the final division is checked to leave no
// remainder.
BigInt count_paths_closed_form(int n);

// The tableau count shares the same right-hand side.
BigInt count_tableaux_closed_form(int n);

// One row of evidence that the counting routes agree at a given n. The
// enumerated fields are filled only in exhaustive mode.
struct CountReport {
  int n = 0;
  BigInt closed_form_paths;
  BigInt closed_form_tableaux;
  BigInt hook_length;
  std::optional<BigInt> enumerated_paths;
  std::optional<BigInt> enumerated_tableaux;
  bool consistent = false;
};

// Evaluates both closed forms and the hook-length count; in exhaustive mode
// also materializes both families and records their sizes. consistent is
// true iff every present value agrees.
CountReport cross_check(int n, bool exhaustive, std::size_t cap = kDefaultEnumerationCap);

// Aligned key-value lines; enumerated rows are omitted when absent.
std::string to_text(const CountReport& report);

// One tab-separated record: n, the three computed routes, the two
// enumerated counts ('-' when absent), and yes/no consistency.
std::string to_machine(const CountReport& report);

}  // namespace thetapath
