#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thetapath/common.hpp"

namespace thetapath {

// Unit steps of a quadrant lattice path. N and E are forward steps, S and W
// backward steps. The enum order E < N < S < W is the canonical word order.
enum class Step : unsigned char { E, N, S, W };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

char to_char(Step s);
std::optional<Step> step_from_char(char c);
bool is_forward(Step s);
bool is_backward(Step s);
Point displacement(Step s);

// Canonical text encoding of a step sequence: the uppercase letter word,
// index 1 = first step. The ASCII order of E, N, S, W matches the canonical
// word order, so plain string comparison sorts words correctly.
using StepWord = std::string;

enum class PathViolation {
  none,
  bad_letter,
  wrong_length,
  leaves_quadrant,
  wrong_endpoint,
  no_backward_step,
  multiple_backward_steps,
  letter_counts,
};

struct PathVerdict {
  PathViolation violation = PathViolation::none;
  int step_index = 0;  // 1-based step at fault, 0 when not tied to a step

  bool ok() const { return violation == PathViolation::none; }
  std::string description() const;
};

// Checks the membership conditions for P_n in order: letters, length 2n+2,
// quadrant containment, endpoint (n,n), exactly one backward step, letter
// counts. Reports the first violation; never throws.
PathVerdict validate_path(const StepWord& word, int n);

// Positions visited by the word starting from the origin, including both
// endpoints; works on any step sequence.
std::vector<Point> trace_positions(const StepWord& word);

// 1-based index of the unique backward step. Throws std::invalid_argument
// when the word has zero or several backward steps.
int backward_step_index(const StepWord& word);

// An element of P_n: a word of 2n+2 steps from (0,0) to (n,n) staying weakly
// inside the first quadrant. Instances are validated on construction and
// immutable afterwards.
class LatticePath {
 public:
  LatticePath(StepWord word, int n);  // throws std::invalid_argument if invalid

  // Infers n from the word length; the length must be even and >= 2.
  static LatticePath parse(const StepWord& word);

  int n() const { return n_; }
  const StepWord& word() const { return word_; }
  int backward_step_index() const { return thetapath::backward_step_index(word_); }
  std::vector<Point> trace() const { return trace_positions(word_); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend std::strong_ordering operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  int n_ = 0;
  StepWord word_;
};

// Every element of P_n exactly once, sorted by word. Throws
// resource_limit_error when the closed-form count exceeds cap.
std::vector<LatticePath> enumerate_paths(int n, std::size_t cap = kDefaultEnumerationCap);

// ASCII drawing of a valid path: the word on the first line, then a grid
// with axes, visited vertices and traversed segments. See README for the
// legend; the output is stable and golden-file tested.
std::string render_path_text(const LatticePath& path);

}  // namespace thetapath
