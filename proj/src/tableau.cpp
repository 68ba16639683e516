#include "thetapath/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "thetapath/counting.hpp"

namespace thetapath {

ThetaShape::ThetaShape(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("theta shape requires n >= 0");
}

int ThetaShape::row_length(int row) const {
  if (row < 0 || row >= row_count()) throw std::out_of_range("row outside theta shape");
  if (row == 0) return n_ + 2;
  return row == 1 ? 2 : 1;
}

std::vector<int> ThetaShape::row_lengths() const {
  std::vector<int> rows(row_count(), 1);
  rows[0] = n_ + 2;
  rows[1] = 2;
  return rows;
}

std::vector<int> ThetaShape::conjugate_row_lengths() const {
  const std::vector<int> rows = row_lengths();
  std::vector<int> conj(rows[0], 0);
  for (int len : rows) {
    for (int c = 0; c < len; ++c) ++conj[c];
  }
  return conj;
}

std::string TableauVerdict::description() const {
  std::ostringstream os;
  switch (violation) {
    case TableauViolation::none:
      return "valid";
    case TableauViolation::not_permutation:
      os << "entries are not exactly 1..N, offending box (" << row << "," << col << ")";
      break;
    case TableauViolation::row_not_increasing:
      os << "row not increasing at box (" << row << "," << col << ")";
      break;
    case TableauViolation::column_not_increasing:
      os << "column not increasing at box (" << row << "," << col << ")";
      break;
  }
  return os.str();
}

TableauVerdict validate_tableau(const std::vector<std::vector<int>>& filling, int n) {
  const ThetaShape shape(n);
  if (filling.size() != static_cast<std::size_t>(shape.row_count())) {
    throw std::invalid_argument("shape mismatch: expected " + std::to_string(shape.row_count()) +
                                " rows for theta(" + std::to_string(n) + ")");
  }
  for (int r = 0; r < shape.row_count(); ++r) {
    if (filling[r].size() != static_cast<std::size_t>(shape.row_length(r))) {
      throw std::invalid_argument("shape mismatch: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(filling[r].size()) + " boxes, expected " +
                                  std::to_string(shape.row_length(r)));
    }
  }

  const int total = shape.box_count();
  std::vector<bool> seen(total + 1, false);
  for (int r = 0; r < shape.row_count(); ++r) {
    for (int c = 0; c < shape.row_length(r); ++c) {
      const int v = filling[r][c];
      if (v < 1 || v > total || seen[v]) {
        return {TableauViolation::not_permutation, r + 1, c + 1};
      }
      seen[v] = true;
    }
  }
  for (int r = 0; r < shape.row_count(); ++r) {
    for (int c = 1; c < shape.row_length(r); ++c) {
      if (filling[r][c - 1] >= filling[r][c]) {
        return {TableauViolation::row_not_increasing, r + 1, c + 1};
      }
    }
  }
  for (int r = 1; r < shape.row_count(); ++r) {
    for (int c = 0; c < shape.row_length(r); ++c) {
      if (filling[r - 1][c] >= filling[r][c]) {
        return {TableauViolation::column_not_increasing, r + 1, c + 1};
      }
    }
  }
  return {};
}

namespace {

int row_offset(const ThetaShape& shape, int row) {
  // Row-major offsets: 0, n+2, n+4, n+5, ...
  if (row == 0) return 0;
  if (row == 1) return shape.row_length(0);
  return shape.row_length(0) + 2 + (row - 2);
}

}  // namespace

StandardTableau::StandardTableau(int n, std::vector<int> row_major)
    : n_(n), entries_(std::move(row_major)) {
  const ThetaShape shape(n);
  if (entries_.size() != static_cast<std::size_t>(shape.box_count())) {
    throw std::invalid_argument("shape mismatch: expected " + std::to_string(shape.box_count()) +
                                " entries for theta(" + std::to_string(n) + ")");
  }
  const TableauVerdict verdict = validate_tableau(rows(), n_);
  if (!verdict.ok()) {
    throw std::invalid_argument("not a standard tableau: " + verdict.description());
  }
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("shape mismatch: theta has at least 2 rows");
  const int n = static_cast<int>(rows.size()) - 2;
  // The row profile must be checked before flattening; a wrong profile with
  // the right box total would otherwise be reinterpreted silently.
  const TableauVerdict verdict = validate_tableau(rows, n);
  if (!verdict.ok()) {
    throw std::invalid_argument("not a standard tableau: " + verdict.description());
  }
  std::vector<int> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return StandardTableau(n, std::move(flat));
}

int StandardTableau::entry(int row, int col) const {
  const ThetaShape s = shape();
  if (row < 0 || row >= s.row_count() || col < 0 || col >= s.row_length(row)) {
    throw std::out_of_range("box outside theta shape");
  }
  return entries_[row_offset(s, row) + col];
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  const ThetaShape s = shape();
  std::vector<std::vector<int>> out(s.row_count());
  for (int r = 0; r < s.row_count(); ++r) {
    const int off = row_offset(s, r);
    out[r].assign(entries_.begin() + off, entries_.begin() + off + s.row_length(r));
  }
  return out;
}

StandardTableau StandardTableau::parse(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::string row_text;
  std::istringstream stream(text);
  bool any = false;
  // A comma anywhere selects the comma-separated form for the whole tableau;
  // a deciding look at single rows would misread one-cell rows like "10".
  const bool commas = text.find(',') != std::string::npos;
  while (std::getline(stream, row_text, '/')) {
    any = true;
    if (row_text.empty()) throw std::invalid_argument("empty row in tableau text");
    std::vector<int> row;
    if (commas) {
      std::istringstream cells(row_text);
      std::string cell;
      while (std::getline(cells, cell, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
          value = std::stoi(cell, &used);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad tableau entry '" + cell + "'");
        }
        if (used != cell.size() || value < 1) {
          throw std::invalid_argument("bad tableau entry '" + cell + "'");
        }
        row.push_back(value);
      }
    } else {
      for (char c : row_text) {
        if (c < '1' || c > '9') {
          throw std::invalid_argument(std::string("bad tableau digit '") + c + "'");
        }
        row.push_back(c - '0');
      }
    }
    rows.push_back(std::move(row));
  }
  if (!any) throw std::invalid_argument("empty tableau text");
  return from_rows(rows);
}

std::string StandardTableau::to_text() const {
  const bool commas = shape().box_count() > 9;
  std::ostringstream os;
  const auto all_rows = rows();
  for (std::size_t r = 0; r < all_rows.size(); ++r) {
    if (r > 0) os << '/';
    for (std::size_t c = 0; c < all_rows[r].size(); ++c) {
      if (commas && c > 0) os << ',';
      os << all_rows[r][c];
    }
  }
  return os.str();
}

RegionAssignment regions(const StandardTableau& tableau) {
  RegionAssignment out;
  const auto rows = tableau.rows();
  out.arm = rows[0];
  for (const auto& row : rows) out.leg.push_back(row[0]);
  out.heart = rows[1][1];
  std::sort(out.arm.begin(), out.arm.end());
  std::sort(out.leg.begin(), out.leg.end());
  return out;
}

StandardTableau transpose(const StandardTableau& tableau) {
  const auto rows = tableau.rows();
  std::vector<std::vector<int>> out(rows[0].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  }
  return StandardTableau::from_rows(out);
}

std::vector<StandardTableau> enumerate_tableaux(int n, std::size_t cap) {
  const ThetaShape shape(n);
  const BigInt predicted = count_tableaux_closed_form(n);
  if (predicted > cap) {
    throw resource_limit_error("SYT(theta(" + std::to_string(n) + ")) has " + predicted.str() +
                               " elements, above the cap of " + std::to_string(cap));
  }

  // Place 1..2n+4 in increasing order; a box is available once its upper and
  // left neighbours are filled, i.e. the first free box of a row r with
  // fill[r] < fill[r-1].
  const std::vector<int> lengths = shape.row_lengths();
  const int rows = shape.row_count();
  const int total = shape.box_count();
  std::vector<int> fill(rows, 0);
  std::vector<std::vector<int>> current(rows);
  for (int r = 0; r < rows; ++r) current[r].reserve(lengths[r]);
  std::vector<StandardTableau> out;

  std::function<void(int)> place = [&](int value) {
    if (value > total) {
      std::vector<int> flat;
      flat.reserve(total);
      for (const auto& row : current) flat.insert(flat.end(), row.begin(), row.end());
      out.emplace_back(n, std::move(flat));
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (fill[r] >= lengths[r]) continue;
      if (r > 0 && fill[r] >= fill[r - 1]) continue;
      current[r].push_back(value);
      ++fill[r];
      place(value + 1);
      --fill[r];
      current[r].pop_back();
    }
  };
  place(1);

  std::sort(out.begin(), out.end());
  return out;
}

BigInt hook_length_count(const std::vector<int>& partition) {
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  if (partition.empty()) return 1;

  std::vector<int> conjugate(partition[0], 0);
  for (int len : partition) {
    for (int c = 0; c < len; ++c) ++conjugate[c];
  }

  int total = 0;
  BigInt hooks = 1;
  for (std::size_t r = 0; r < partition.size(); ++r) {
    for (int c = 0; c < partition[r]; ++c) {
      const int arm = partition[r] - c - 1;
      const int leg = conjugate[c] - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
      ++total;
    }
  }
  BigInt factorial = 1;
  for (int k = 2; k <= total; ++k) factorial *= k;

  const BigInt count = factorial / hooks;
  if (count * hooks != factorial) {
    throw std::logic_error("hook product does not divide N!");
  }
  return count;
}

std::string render_tableau_text(const StandardTableau& tableau) {
  const int width = static_cast<int>(std::to_string(tableau.shape().box_count()).size());
  std::ostringstream os;
  for (const auto& row : tableau.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      std::string cell = std::to_string(row[c]);
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace thetapath
