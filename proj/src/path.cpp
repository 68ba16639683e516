#include "thetapath/path.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "thetapath/counting.hpp"

namespace thetapath {

char to_char(Step s) {
  switch (s) {
    case Step::E: return 'E';
    case Step::N: return 'N';
    case Step::S: return 'S';
    case Step::W: return 'W';
  }
  throw std::logic_error("unreachable step kind");
}

std::optional<Step> step_from_char(char c) {
  switch (c) {
    case 'E': return Step::E;
    case 'N': return Step::N;
    case 'S': return Step::S;
    case 'W': return Step::W;
    default: return std::nullopt;
  }
}

bool is_forward(Step s) { return s == Step::N || s == Step::E; }

bool is_backward(Step s) { return !is_forward(s); }

Point displacement(Step s) {
  switch (s) {
    case Step::E: return {1, 0};
    case Step::N: return {0, 1};
    case Step::S: return {0, -1};
    case Step::W: return {-1, 0};
  }
  throw std::logic_error("unreachable step kind");
}

std::string PathVerdict::description() const {
  std::ostringstream os;
  switch (violation) {
    case PathViolation::none:
      return "valid";
    case PathViolation::bad_letter:
      os << "letter at step " << step_index << " is not one of N, S, E, W";
      break;
    case PathViolation::wrong_length:
      os << "word length is not 2n+2";
      break;
    case PathViolation::leaves_quadrant:
      os << "leaves quadrant at step " << step_index;
      break;
    case PathViolation::wrong_endpoint:
      os << "endpoint is not (n, n)";
      break;
    case PathViolation::no_backward_step:
      os << "no backward step";
      break;
    case PathViolation::multiple_backward_steps:
      os << "second backward step at step " << step_index;
      break;
    case PathViolation::letter_counts:
      os << "letter counts do not match the backward step type";
      break;
  }
  return os.str();
}

PathVerdict validate_path(const StepWord& word, int n) {
  if (n < 0) return {PathViolation::wrong_length, 0};
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!step_from_char(word[i])) return {PathViolation::bad_letter, static_cast<int>(i + 1)};
  }
  if (word.size() != static_cast<std::size_t>(2 * n + 2)) return {PathViolation::wrong_length, 0};

  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Point d = displacement(*step_from_char(word[i]));
    x += d.x;
    y += d.y;
    if (x < 0 || y < 0) return {PathViolation::leaves_quadrant, static_cast<int>(i + 1)};
  }
  if (x != n || y != n) return {PathViolation::wrong_endpoint, 0};

  int backward = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (is_backward(*step_from_char(word[i]))) {
      ++backward;
      if (backward > 1) return {PathViolation::multiple_backward_steps, static_cast<int>(i + 1)};
    }
  }
  if (backward == 0) return {PathViolation::no_backward_step, 0};

  // Implied by the length, endpoint and backward-count checks; kept so the
  // validator states the full membership condition.
  const auto count = [&](char c) { return std::count(word.begin(), word.end(), c); };
  const bool south = count('S') == 1;
  const long n_count = count('N');
  const long e_count = count('E');
  if (south ? (n_count != n + 1 || e_count != n) : (n_count != n || e_count != n + 1)) {
    return {PathViolation::letter_counts, 0};
  }
  return {};
}

std::vector<Point> trace_positions(const StepWord& word) {
  std::vector<Point> out;
  out.reserve(word.size() + 1);
  Point at{0, 0};
  out.push_back(at);
  for (char c : word) {
    const auto step = step_from_char(c);
    if (!step) throw std::invalid_argument("bad step letter in word");
    const Point d = displacement(*step);
    at = {at.x + d.x, at.y + d.y};
    out.push_back(at);
  }
  return out;
}

int backward_step_index(const StepWord& word) {
  int index = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto step = step_from_char(word[i]);
    if (!step) throw std::invalid_argument("bad step letter in word");
    if (is_backward(*step)) {
      if (index != 0) throw std::invalid_argument("multiple backward steps in word");
      index = static_cast<int>(i + 1);
    }
  }
  if (index == 0) throw std::invalid_argument("no backward step in word");
  return index;
}

LatticePath::LatticePath(StepWord word, int n) : n_(n), word_(std::move(word)) {
  const PathVerdict verdict = validate_path(word_, n_);
  if (!verdict.ok()) {
    throw std::invalid_argument("not a lattice path in P_" + std::to_string(n) + ": " +
                                verdict.description());
  }
}

LatticePath LatticePath::parse(const StepWord& word) {
  if (word.size() < 2 || word.size() % 2 != 0) {
    throw std::invalid_argument("word length must be even and at least 2");
  }
  return LatticePath(word, static_cast<int>(word.size() / 2) - 1);
}

namespace {

// Multiset permutations of `letters` (given sorted) in ascending word order,
// filtered to valid paths. Each family member has one backward step; the
// other letters are fixed by its type, so two next_permutation sweeps cover
// P_n exactly.
void append_valid_permutations(StepWord letters, int n, std::vector<LatticePath>& out) {
  std::sort(letters.begin(), letters.end());
  do {
    if (validate_path(letters, n).ok()) out.emplace_back(letters, n);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

}  // namespace

std::vector<LatticePath> enumerate_paths(int n, std::size_t cap) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const BigInt predicted = count_paths_closed_form(n);
  if (predicted > cap) {
    throw resource_limit_error("P_" + std::to_string(n) + " has " + predicted.str() +
                               " elements, above the cap of " + std::to_string(cap));
  }

  std::vector<LatticePath> south;
  std::vector<LatticePath> west;
  append_valid_permutations(StepWord(n, 'E') + StepWord(n + 1, 'N') + "S", n, south);
  append_valid_permutations(StepWord(n + 1, 'E') + StepWord(n, 'N') + "W", n, west);

  std::vector<LatticePath> out;
  out.reserve(south.size() + west.size());
  std::merge(south.begin(), south.end(), west.begin(), west.end(), std::back_inserter(out));
  return out;
}

namespace {

std::string trim_right(std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

std::string render_path_text(const LatticePath& path) {
  const std::vector<Point> trace = path.trace();
  int max_x = path.n();
  int max_y = path.n();
  for (const Point& p : trace) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }

  std::vector<std::vector<bool>> visited(max_y + 1, std::vector<bool>(max_x + 1, false));
  std::vector<std::vector<bool>> horiz(max_y + 1, std::vector<bool>(max_x + 1, false));
  std::vector<std::vector<bool>> vert(max_y + 1, std::vector<bool>(max_x + 1, false));
  for (std::size_t i = 0; i < trace.size(); ++i) {
    visited[trace[i].y][trace[i].x] = true;
    if (i == 0) continue;
    const Point a = trace[i - 1];
    const Point b = trace[i];
    if (a.y == b.y) {
      horiz[a.y][std::min(a.x, b.x)] = true;  // segment (x,y)-(x+1,y)
    } else {
      vert[std::min(a.y, b.y)][a.x] = true;  // segment (x,y)-(x,y+1)
    }
  }

  const int label_width = static_cast<int>(std::to_string(max_y).size());
  std::ostringstream os;
  os << path.word() << '\n';
  for (int y = max_y; y >= 0; --y) {
    std::string row = std::to_string(y);
    row.insert(row.begin(), label_width - row.size(), ' ');
    row += " | ";
    for (int x = 0; x <= max_x; ++x) {
      row += visited[y][x] ? 'o' : '.';
      if (x < max_x) row += horiz[y][x] ? "---" : "   ";
    }
    os << trim_right(row) << '\n';
    if (y > 0) {
      std::string gap(label_width, ' ');
      gap += " | ";
      for (int x = 0; x <= max_x; ++x) {
        gap += vert[y - 1][x] ? '|' : ' ';
        if (x < max_x) gap += "   ";
      }
      os << trim_right(gap) << '\n';
    }
  }
  os << std::string(label_width, ' ') << " +" << std::string(4 * max_x + 3, '-') << '\n';
  std::string labels(label_width + 3, ' ');
  for (int x = 0; x <= max_x; ++x) {
    std::string lab = std::to_string(x);
    labels += lab;
    if (x < max_x) labels += std::string(4 - lab.size(), ' ');
  }
  os << trim_right(labels) << '\n';
  return os.str();
}

}  // namespace thetapath
