#pragma once

// Shared test helpers: a deliberately naive quadratic scanner used as an
// independent oracle for the validator, plus small fixture utilities. The
// scanner never calls into validate.cpp; it re-reads the defining conditions
// cell by cell so the two implementations can only agree by being right.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mapda/coded_array.hpp"
#include "mapda/text_format.hpp"

namespace testing_support {

using mapda::CodedArray;
using mapda::Entry;

inline CodedArray arr(const std::string& text) { return mapda::parse_array(text); }

struct Cell {
  std::int64_t row = 0;  // 0-based
  std::int64_t col = 0;
  std::int64_t value = 0;  // 0 = star
};

inline std::vector<Cell> flatten(const CodedArray& a) {
  std::vector<Cell> cells;
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    for (std::int64_t c = 0; c < a.cols(); ++c) {
      cells.push_back({r, c, a.code(r, c)});
    }
  }
  return cells;
}

// C1: same number of stars in every column.
inline bool scan_c1(const CodedArray& a) {
  std::vector<std::int64_t> stars(a.cols(), 0);
  for (const Cell& cell : flatten(a)) {
    if (cell.value == 0) stars[cell.col] += 1;
  }
  return std::all_of(stars.begin(), stars.end(),
                     [&](std::int64_t z) { return z == stars[0]; });
}

// C2: the integers present are exactly 1..S for some S >= 1.
inline bool scan_c2(const CodedArray& a) {
  std::set<std::int64_t> seen;
  for (const Cell& cell : flatten(a)) {
    if (cell.value != 0) seen.insert(cell.value);
  }
  if (seen.empty()) return false;
  return *seen.rbegin() == static_cast<std::int64_t>(seen.size());
}

// Single-antenna C3: every pair of equal integers sits in distinct rows and
// columns and the two crossing cells are stars.
inline bool scan_pda_c3(const CodedArray& a) {
  const std::vector<Cell> cells = flatten(a);
  for (const Cell& x : cells) {
    if (x.value == 0) continue;
    for (const Cell& y : cells) {
      if (y.value != x.value || (y.row == x.row && y.col == x.col)) continue;
      if (y.row == x.row || y.col == x.col) return false;
      if (!a.is_star(x.row, y.col) || !a.is_star(y.row, x.col)) return false;
    }
  }
  return true;
}

// Multi-antenna C3: no integer occurs twice in one column.
inline bool scan_mapda_c3(const CodedArray& a) {
  const std::vector<Cell> cells = flatten(a);
  for (const Cell& x : cells) {
    if (x.value == 0) continue;
    for (const Cell& y : cells) {
      if (y.value == x.value && y.col == x.col && y.row != x.row) return false;
    }
  }
  return true;
}

// C4: for every integer s, every row of the subarray spanned by the rows and
// columns containing s holds at most `antennas` integer entries.
inline bool scan_c4(const CodedArray& a, std::int64_t antennas) {
  std::set<std::int64_t> values;
  for (const Cell& cell : flatten(a)) {
    if (cell.value != 0) values.insert(cell.value);
  }
  for (const std::int64_t s : values) {
    std::set<std::int64_t> rows, cols;
    for (const Cell& cell : flatten(a)) {
      if (cell.value == s) {
        rows.insert(cell.row);
        cols.insert(cell.col);
      }
    }
    for (const std::int64_t r : rows) {
      std::int64_t integers = 0;
      for (const std::int64_t c : cols) {
        if (!a.is_star(r, c)) integers += 1;
      }
      if (integers > antennas) return false;
    }
  }
  return true;
}

inline bool scan_pda(const CodedArray& a) {
  return scan_c1(a) && scan_c2(a) && scan_pda_c3(a);
}

inline bool scan_mapda(const CodedArray& a, std::int64_t antennas) {
  return scan_c1(a) && scan_c2(a) && scan_mapda_c3(a) && scan_c4(a, antennas);
}

// Star-preserving relabeling: applies a random permutation of [S] to the
// integer entries. Preserves every defining condition, so the result is a
// valid array exactly when the input is.
inline CodedArray relabel_integers(const CodedArray& a, std::uint64_t seed) {
  std::int64_t max_value = 0;
  for (const Cell& cell : flatten(a)) max_value = std::max(max_value, cell.value);
  std::vector<std::int64_t> perm(static_cast<std::size_t>(max_value));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int64_t>(i) + 1;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  CodedArray::Grid grid = a.grid();
  for (std::int64_t r = 0; r < a.rows(); ++r) {
    for (std::int64_t c = 0; c < a.cols(); ++c) {
      if (grid(r, c) != 0) grid(r, c) = perm[static_cast<std::size_t>(grid(r, c) - 1)];
    }
  }
  return CodedArray(std::move(grid));
}

// One seeded random single-cell edit: star -> integer, integer -> star, or
// integer -> different integer. Usually breaks validity, sometimes not.
inline CodedArray mutate_one_cell(const CodedArray& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CodedArray::Grid grid = a.grid();
  const std::int64_t r = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(a.rows()));
  const std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(a.cols()));
  const std::int64_t s = a.max_value();
  if (grid(r, c) == 0) {
    grid(r, c) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::max<std::int64_t>(s, 1))) + 1;
  } else if (rng() % 2 == 0) {
    grid(r, c) = 0;
  } else {
    grid(r, c) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(s + 1)) + 1;
  }
  return CodedArray(std::move(grid));
}

}  // namespace testing_support
