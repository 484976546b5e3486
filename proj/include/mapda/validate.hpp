#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapda/coded_array.hpp"

namespace mapda {

// 1-based cell coordinates, as rendered in reports and error messages.
struct Position {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(Position a, Position b) { return a.row == b.row && a.col == b.col; }
};

// Parameters of a placement delivery array: users K (columns), packets F
// (rows per file), stars Z (cached packets per column), blocks S (distinct
// integers). regularity g is set when every integer occurs equally often.
struct PdaParams {
  std::int64_t users = 0;
  std::int64_t packets = 0;
  std::int64_t stars = 0;
  std::int64_t blocks = 0;
  std::optional<std::int64_t> regularity;
};

// Same counts for a multiple-antenna array, plus the antenna count L that the
// per-block row budget was checked against.
struct MapdaParams {
  std::int64_t antennas = 0;
  std::int64_t users = 0;
  std::int64_t packets = 0;
  std::int64_t stars = 0;
  std::int64_t blocks = 0;
  std::optional<std::int64_t> regularity;
};

// Which defining condition an array violates.
//
//   star_count        unequal number of stars across columns
//   integer_range     integers are not exactly 1..S (gap or none at all)
//   repeated_in_line  an integer occurs twice in one row or one column
//                     (single-antenna arrays only)
//   missing_star_pair two equal integers whose crossing cells are not both
//                     stars (single-antenna arrays only)
//   column_repeat     an integer occurs twice in one column (multi-antenna)
//   row_budget        a row of the subarray induced by one integer carries
//                     more integer entries than there are antennas
enum class Violation {
  star_count,
  integer_range,
  repeated_in_line,
  missing_star_pair,
  column_repeat,
  row_budget,
};

const char* violation_name(Violation v);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(Violation condition, const std::string& message, std::vector<Position> where,
                  std::int64_t value = 0)
      : std::runtime_error(message), condition_(condition), where_(std::move(where)),
        value_(value) {}

  Violation condition() const { return condition_; }
  const std::vector<Position>& where() const { return where_; }

  // The offending block index, when the condition concerns one.
  std::int64_t value() const { return value_; }

 private:
  Violation condition_;
  std::vector<Position> where_;
  std::int64_t value_;
};

// A rectangular selection of rows and columns of a parent array; used for
// the subarray induced by one integer. Indices are 0-based and ascending.
class SubarrayView {
 public:
  SubarrayView(const CodedArray& parent, std::vector<std::int64_t> rows,
               std::vector<std::int64_t> cols)
      : parent_(&parent), rows_(std::move(rows)), cols_(std::move(cols)) {}

  std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int64_t col_count() const { return static_cast<std::int64_t>(cols_.size()); }

  const std::vector<std::int64_t>& row_indices() const { return rows_; }
  const std::vector<std::int64_t>& col_indices() const { return cols_; }

  Entry at(std::int64_t i, std::int64_t j) const {
    return parent_->at(rows_.at(i), cols_.at(j));
  }

  CodedArray materialize() const;

 private:
  const CodedArray* parent_;
  std::vector<std::int64_t> rows_;
  std::vector<std::int64_t> cols_;
};

// Checks the single-antenna array conditions: equal star count per column,
// integers exactly 1..S, and for every pair of equal integers distinct rows,
// distinct columns, and stars at both crossing cells.
PdaParams validate_pda(const CodedArray& a);

// Checks the multiple-antenna conditions for L antennas: equal star count
// per column, integers exactly 1..S, no integer twice in a column, and at
// most L integer entries in every row of every induced subarray. Repeats
// within a row are allowed; L = 1 accepts exactly the single-antenna arrays.
MapdaParams validate_mapda(const CodedArray& a, std::int64_t antennas);

// The subarray induced by block s: the rows and columns of a that contain s,
// in ascending order. Throws std::invalid_argument when s never occurs.
SubarrayView subarray_of(const CodedArray& a, std::int64_t s);

// Occurrence positions of every block index in row-major scan order;
// element s-1 lists block s. Validates that the integers present are
// exactly 1..S (the integer_range condition).
std::vector<std::vector<Position>> block_occurrences(const CodedArray& a);

// The subarray spanning the rows and columns named by the given positions,
// each taken ascending; the single-pass counterpart of subarray_of.
SubarrayView subarray_around(const CodedArray& a, const std::vector<Position>& occurrences);

}  // namespace mapda
