#include "mapda/validate.hpp"

#include <algorithm>
#include <numeric>

namespace mapda {
namespace {

std::string cell(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

// Star count of every column; throws unless all are equal.
std::int64_t check_star_count(const CodedArray& a) {
  const auto& g = a.grid();
  std::int64_t first = (g.col(0).array() == Entry::kStarCode).count();
  for (std::int64_t k = 1; k < a.cols(); ++k) {
    const std::int64_t stars = (g.col(k).array() == Entry::kStarCode).count();
    if (stars != first) {
      throw ValidationError(
          Violation::star_count,
          "column 1 has " + std::to_string(first) + " stars but column " + std::to_string(k + 1) +
              " has " + std::to_string(stars),
          {Position{0, 1}, Position{0, k + 1}});
    }
  }
  return first;
}

std::optional<std::int64_t> regularity_of(const std::vector<std::vector<Position>>& occ) {
  std::optional<std::int64_t> g;
  for (const auto& positions : occ) {
    const auto count = static_cast<std::int64_t>(positions.size());
    if (!g) {
      g = count;
    } else if (*g != count) {
      return std::nullopt;
    }
  }
  return g;
}

}  // namespace

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::star_count: return "star-count";
    case Violation::integer_range: return "integer-range";
    case Violation::repeated_in_line: return "repeated-in-line";
    case Violation::missing_star_pair: return "missing-star-pair";
    case Violation::column_repeat: return "column-repeat";
    case Violation::row_budget: return "row-budget";
  }
  return "unknown";
}

CodedArray SubarrayView::materialize() const {
  CodedArray out(row_count(), col_count());
  for (std::int64_t i = 0; i < row_count(); ++i) {
    for (std::int64_t j = 0; j < col_count(); ++j) {
      out.set(i, j, at(i, j));
    }
  }
  return out;
}

std::vector<std::vector<Position>> block_occurrences(const CodedArray& a) {
  const std::int64_t top = a.max_value();
  if (top == 0) {
    throw ValidationError(Violation::integer_range, "array contains no integer entries", {});
  }
  std::vector<std::vector<Position>> occ(top);
  for (std::int64_t f = 0; f < a.rows(); ++f) {
    for (std::int64_t k = 0; k < a.cols(); ++k) {
      const std::int64_t code = a.code(f, k);
      if (code != Entry::kStarCode) {
        occ[code - 1].push_back(Position{f + 1, k + 1});
      }
    }
  }
  for (std::int64_t s = 1; s <= top; ++s) {
    if (occ[s - 1].empty()) {
      throw ValidationError(Violation::integer_range,
                            "integer " + std::to_string(s) + " never occurs although " +
                                std::to_string(top) + " does",
                            {}, s);
    }
  }
  return occ;
}

SubarrayView subarray_around(const CodedArray& a, const std::vector<Position>& occurrences) {
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;
  rows.reserve(occurrences.size());
  cols.reserve(occurrences.size());
  for (const Position p : occurrences) {
    rows.push_back(p.row - 1);
    cols.push_back(p.col - 1);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return SubarrayView(a, std::move(rows), std::move(cols));
}

PdaParams validate_pda(const CodedArray& a) {
  const std::int64_t stars = check_star_count(a);
  const auto occ = block_occurrences(a);

  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    const auto s = static_cast<std::int64_t>(s0 + 1);
    const auto& positions = occ[s0];
    for (std::size_t i = 0; i < positions.size(); ++i) {
      for (std::size_t j = i + 1; j < positions.size(); ++j) {
        const Position p = positions[i];
        const Position q = positions[j];
        if (p.row == q.row || p.col == q.col) {
          throw ValidationError(Violation::repeated_in_line,
                                "integer " + std::to_string(s) + " repeats at " + cell(p) +
                                    " and " + cell(q),
                                {p, q}, s);
        }
        if (!a.is_star(p.row - 1, q.col - 1) || !a.is_star(q.row - 1, p.col - 1)) {
          throw ValidationError(Violation::missing_star_pair,
                                "integer " + std::to_string(s) + " at " + cell(p) + " and " +
                                    cell(q) + " requires stars at " +
                                    cell(Position{p.row, q.col}) + " and " +
                                    cell(Position{q.row, p.col}),
                                {p, q}, s);
        }
      }
    }
  }

  PdaParams params;
  params.users = a.cols();
  params.packets = a.rows();
  params.stars = stars;
  params.blocks = static_cast<std::int64_t>(occ.size());
  params.regularity = regularity_of(occ);
  return params;
}

MapdaParams validate_mapda(const CodedArray& a, std::int64_t antennas) {
  if (antennas < 1) {
    throw std::invalid_argument("validate_mapda: antenna count must be >= 1, got " +
                                std::to_string(antennas));
  }
  const std::int64_t stars = check_star_count(a);
  const auto occ = block_occurrences(a);

  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    const auto s = static_cast<std::int64_t>(s0 + 1);
    const auto& positions = occ[s0];
    for (std::size_t i = 0; i < positions.size(); ++i) {
      for (std::size_t j = i + 1; j < positions.size(); ++j) {
        if (positions[i].col == positions[j].col) {
          throw ValidationError(Violation::column_repeat,
                                "integer " + std::to_string(s) + " occurs twice in column " +
                                    std::to_string(positions[i].col) + ", at " +
                                    cell(positions[i]) + " and " + cell(positions[j]),
                                {positions[i], positions[j]}, s);
        }
      }
    }
  }

  // Row budget: in the subarray induced by s, no row may carry more integer
  // entries than there are transmit antennas.
  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    const auto s = static_cast<std::int64_t>(s0 + 1);
    const SubarrayView view = subarray_around(a, occ[s0]);
    for (std::int64_t i = 0; i < view.row_count(); ++i) {
      std::int64_t integers = 0;
      for (std::int64_t j = 0; j < view.col_count(); ++j) {
        if (view.at(i, j).is_integer()) {
          ++integers;
        }
      }
      if (integers > antennas) {
        throw ValidationError(Violation::row_budget,
                              "row " + std::to_string(view.row_indices()[i] + 1) +
                                  " of the subarray of integer " + std::to_string(s) +
                                  " carries " + std::to_string(integers) +
                                  " integer entries, budget is " + std::to_string(antennas),
                              {Position{view.row_indices()[i] + 1, 0}}, s);
      }
    }
  }

  MapdaParams params;
  params.antennas = antennas;
  params.users = a.cols();
  params.packets = a.rows();
  params.stars = stars;
  params.blocks = static_cast<std::int64_t>(occ.size());
  params.regularity = regularity_of(occ);
  return params;
}

SubarrayView subarray_of(const CodedArray& a, std::int64_t s) {
  if (s < 1) {
    throw std::invalid_argument("subarray_of: block index must be >= 1, got " +
                                std::to_string(s));
  }
  std::vector<Position> occurrences;
  for (std::int64_t f = 0; f < a.rows(); ++f) {
    for (std::int64_t k = 0; k < a.cols(); ++k) {
      if (a.code(f, k) == s) {
        occurrences.push_back(Position{f + 1, k + 1});
      }
    }
  }
  if (occurrences.empty()) {
    throw std::invalid_argument("subarray_of: integer " + std::to_string(s) +
                                " does not occur in the array");
  }
  return subarray_around(a, occurrences);
}

}  // namespace mapda
