#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mapda {

// One cell of a placement delivery array: either the star placeholder
// (content the user already caches, never transmitted) or the index of the
// delivery block that serves it. Block indices are >= 1; the raw code 0 is
// reserved for the star.
class Entry {
 public:
  static constexpr std::int64_t kStarCode = 0;

  Entry() = default;

  static Entry star() { return Entry{}; }

  static Entry integer(std::int64_t value) {
    if (value < 1) {
      throw std::invalid_argument("Entry::integer: block index must be >= 1, got " +
                                  std::to_string(value));
    }
    Entry e;
    e.code_ = value;
    return e;
  }

  static Entry from_code(std::int64_t code) {
    return code == kStarCode ? star() : integer(code);
  }

  bool is_star() const { return code_ == kStarCode; }
  bool is_integer() const { return code_ != kStarCode; }

  std::int64_t value() const {
    if (is_star()) {
      throw std::logic_error("Entry::value: entry is a star");
    }
    return code_;
  }

  std::int64_t code() const { return code_; }

  friend bool operator==(Entry a, Entry b) { return a.code_ == b.code_; }
  friend bool operator!=(Entry a, Entry b) { return !(a == b); }

 private:
  std::int64_t code_ = kStarCode;
};

// Dense F x K array of entries. Storage is an Eigen integer matrix in row
// major order (rows are scanned far more often than columns); the public
// interface is 0-based, reports and errors are rendered 1-based.
class CodedArray {
 public:
  using Grid = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  CodedArray(std::int64_t rows, std::int64_t cols) {
    if (rows < 1 || cols < 1) {
      throw std::invalid_argument("CodedArray: dimensions must be positive, got " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
    }
    grid_ = Grid::Constant(rows, cols, Entry::kStarCode);
  }

  explicit CodedArray(Grid grid) : grid_(std::move(grid)) {
    if (grid_.rows() < 1 || grid_.cols() < 1) {
      throw std::invalid_argument("CodedArray: dimensions must be positive");
    }
    if ((grid_.array() < 0).any()) {
      throw std::invalid_argument("CodedArray: raw codes must be >= 0");
    }
  }

  std::int64_t rows() const { return grid_.rows(); }
  std::int64_t cols() const { return grid_.cols(); }

  Entry at(std::int64_t f, std::int64_t k) const { return Entry::from_code(checked(f, k)); }

  void set(std::int64_t f, std::int64_t k, Entry e) {
    check_bounds(f, k);
    grid_(f, k) = e.code();
  }

  bool is_star(std::int64_t f, std::int64_t k) const { return checked(f, k) == Entry::kStarCode; }

  // Raw code access: 0 for the star, the block index otherwise.
  std::int64_t code(std::int64_t f, std::int64_t k) const { return checked(f, k); }

  // Largest block index present; 0 when the array is all stars.
  std::int64_t max_value() const { return grid_.maxCoeff(); }

  const Grid& grid() const { return grid_; }
  Grid& grid() { return grid_; }

  friend bool operator==(const CodedArray& a, const CodedArray& b) {
    return a.grid_.rows() == b.grid_.rows() && a.grid_.cols() == b.grid_.cols() &&
           a.grid_ == b.grid_;
  }
  friend bool operator!=(const CodedArray& a, const CodedArray& b) { return !(a == b); }

 private:
  std::int64_t checked(std::int64_t f, std::int64_t k) const {
    check_bounds(f, k);
    return grid_(f, k);
  }

  void check_bounds(std::int64_t f, std::int64_t k) const {
    if (f < 0 || f >= grid_.rows() || k < 0 || k >= grid_.cols()) {
      throw std::out_of_range("CodedArray: index (" + std::to_string(f) + "," +
                              std::to_string(k) + ") outside " + std::to_string(grid_.rows()) +
                              "x" + std::to_string(grid_.cols()));
    }
  }

  Grid grid_;
};

}  // namespace mapda
