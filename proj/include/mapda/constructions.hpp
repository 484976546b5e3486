#pragma once

#include <cstdint>
#include <vector>

#include "mapda/coded_array.hpp"

namespace mapda {

// The subset-indexed array behind the classic uncoded-prefetching scheme:
// rows are the t-subsets of [K] in lexicographic order, the cell of row T
// and user k is a star when k is in T and otherwise the lexicographic rank
// of the (t+1)-subset T + {k}. Every integer occurs exactly t+1 times.
// Requires 1 <= t < K; refuses parameter choices whose row count K choose t
// exceeds max_cells / K cells.
CodedArray mn_pda(std::int64_t users, std::int64_t t,
                  std::int64_t max_cells = std::int64_t{1} << 26);

// Cyclic Latin square of order n: cell (i, j) holds ((i + j - 2) mod n) + 1
// with 1-based i, j.
CodedArray latin_square(std::int64_t order);

// Latin-square array for K users and L antennas: the cyclic Latin square of
// order K with every value above L replaced by a star. Has Z = K - L and
// S = L; every integer occurs K times.
CodedArray latin_mapda(std::int64_t users, std::int64_t antennas);

// Cyclically right-shifts the integer entries of a row by `shift` positions
// while the stars stay put: with integers at ascending positions c_1..c_p,
// position c_j receives the value previously at c_{(j - 1 - shift) mod p + 1}.
std::vector<Entry> right_shift_row(const std::vector<Entry>& row, std::int64_t shift);

}  // namespace mapda
