#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "thetapath/bigint.hpp"
#include "thetapath/common.hpp"

namespace thetapath {

// The partition (n+2, 2, 1^n) of 2n+4: a hook of arm and leg length n+2
// plus one extra box at (2,2). The shape equals its own conjugate.
class ThetaShape {
 public:
  explicit ThetaShape(int n);  // throws std::invalid_argument when n < 0

  int n() const { return n_; }
  int row_count() const { return n_ + 2; }
  int box_count() const { return 2 * n_ + 4; }
  int row_length(int row) const;  // 0-based row
  std::vector<int> row_lengths() const;
  std::vector<int> conjugate_row_lengths() const;

 private:
  int n_ = 0;
};

enum class TableauViolation {
  none,
  not_permutation,
  row_not_increasing,
  column_not_increasing,
};

struct TableauVerdict {
  TableauViolation violation = TableauViolation::none;
  int row = 0;  // 1-based offending box, (0,0) when none
  int col = 0;

  bool ok() const { return violation == TableauViolation::none; }
  std::string description() const;
};

// Content check for a filling of the theta(n) diagram: entries must be
// exactly 1..2n+4 and strictly increase along rows and down columns. The
// filling must fit the diagram; a wrong row profile throws
// std::invalid_argument (shape mismatch) rather than yielding a verdict.
TableauVerdict validate_tableau(const std::vector<std::vector<int>>& filling, int n);

// A standard Young tableau of shape theta(n), stored row-major. Validated on
// construction, immutable afterwards. Comparison order is lexicographic on
// the row-major reading word.
class StandardTableau {
 public:
  StandardTableau(int n, std::vector<int> row_major);  // throws if invalid
  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);

  // Text format: rows joined by '/'; entries comma-separated when the box
  // count exceeds 9, concatenated digits otherwise. parse accepts both.
  static StandardTableau parse(const std::string& text);
  std::string to_text() const;

  int n() const { return n_; }
  ThetaShape shape() const { return ThetaShape(n_); }
  int entry(int row, int col) const;  // 0-based box
  const std::vector<int>& row_major() const { return entries_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend std::strong_ordering operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

// The arm/leg/heart decomposition: arm = entries of row 1, leg = entries of
// column 1, heart = the entry at box (2,2). Entry 1 sits in the corner and
// belongs to both arm and leg.
struct RegionAssignment {
  std::vector<int> arm;  // ascending, contains 1
  std::vector<int> leg;  // ascending, contains 1
  int heart = 0;
};

RegionAssignment regions(const StandardTableau& tableau);

// Reflection across the main diagonal; theta(n) is self-conjugate, so the
// result has the same shape. An involution.
StandardTableau transpose(const StandardTableau& tableau);

// Every tableau of shape theta(n) exactly once, sorted by reading word.
// Throws resource_limit_error when the predicted count exceeds cap.
std::vector<StandardTableau> enumerate_tableaux(int n, std::size_t cap = kDefaultEnumerationCap);

// Number of standard Young tableaux of an arbitrary partition shape:
// N! / product of hook lengths, computed exactly. The partition must be
// weakly decreasing with positive parts; the empty partition counts 1.
BigInt hook_length_count(const std::vector<int>& partition);

// Young-diagram drawing, one row per line, entries right-aligned.
std::string render_tableau_text(const StandardTableau& tableau);

}  // namespace thetapath
