#include "mapda/constructions.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "mapda/detail/subsets.hpp"

namespace mapda {
namespace {

using detail::first_subset;
using detail::next_subset;

// K choose t as an exact integer; the caller compares against its cell
// budget before materializing anything.
mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    return 0;
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

CodedArray mn_pda(std::int64_t users, std::int64_t t, std::int64_t max_cells) {
  if (t < 1 || t >= users) {
    throw std::invalid_argument("mn_pda: need 1 <= t < K, got t=" + std::to_string(t) +
                                ", K=" + std::to_string(users));
  }
  const mpz_class row_count = binomial(users, t);
  if (row_count * users > max_cells) {
    throw std::invalid_argument("mn_pda: K=" + std::to_string(users) + ", t=" +
                                std::to_string(t) + " needs " +
                                mpz_class(row_count * users).get_str() +
                                " cells, limit is " + std::to_string(max_cells));
  }

  // Row index per t-subset, in lexicographic order.
  std::map<std::vector<std::int64_t>, std::int64_t> row_of;
  {
    std::vector<std::int64_t> subset = first_subset(t);
    std::int64_t index = 0;
    do {
      row_of.emplace(subset, index++);
    } while (next_subset(subset, users));
  }

  CodedArray a(static_cast<std::int64_t>(row_count.get_si()), users);
  for (const auto& [subset, f] : row_of) {
    for (const std::int64_t k : subset) {
      a.set(f, k, Entry::star());
    }
  }

  // Integers: enumerate the (t+1)-subsets in lexicographic order; subset
  // number s covers cell (B \ {k}, k) for each of its members k.
  std::vector<std::int64_t> super = first_subset(t + 1);
  std::int64_t s = 1;
  do {
    for (std::int64_t drop = 0; drop <= t; ++drop) {
      std::vector<std::int64_t> row_subset;
      row_subset.reserve(t);
      for (std::int64_t i = 0; i <= t; ++i) {
        if (i != drop) {
          row_subset.push_back(super[i]);
        }
      }
      a.set(row_of.at(row_subset), super[drop], Entry::integer(s));
    }
    ++s;
  } while (next_subset(super, users));

  return a;
}

CodedArray latin_square(std::int64_t order) {
  if (order < 1) {
    throw std::invalid_argument("latin_square: order must be >= 1, got " +
                                std::to_string(order));
  }
  CodedArray a(order, order);
  for (std::int64_t i = 0; i < order; ++i) {
    for (std::int64_t j = 0; j < order; ++j) {
      a.set(i, j, Entry::integer((i + j) % order + 1));
    }
  }
  return a;
}

CodedArray latin_mapda(std::int64_t users, std::int64_t antennas) {
  if (antennas < 1 || antennas > users) {
    throw std::invalid_argument("latin_mapda: need 1 <= L <= K, got L=" +
                                std::to_string(antennas) + ", K=" + std::to_string(users));
  }
  CodedArray a = latin_square(users);
  for (std::int64_t i = 0; i < users; ++i) {
    for (std::int64_t j = 0; j < users; ++j) {
      if (a.code(i, j) > antennas) {
        a.set(i, j, Entry::star());
      }
    }
  }
  return a;
}

std::vector<Entry> right_shift_row(const std::vector<Entry>& row, std::int64_t shift) {
  if (shift < 0) {
    throw std::invalid_argument("right_shift_row: shift must be >= 0, got " +
                                std::to_string(shift));
  }
  std::vector<std::int64_t> positions;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c].is_integer()) {
      positions.push_back(static_cast<std::int64_t>(c));
    }
  }
  std::vector<Entry> out = row;
  const auto p = static_cast<std::int64_t>(positions.size());
  if (p == 0) {
    return out;
  }
  for (std::int64_t j = 0; j < p; ++j) {
    const std::int64_t source = ((j - shift) % p + p) % p;
    out[positions[j]] = row[positions[source]];
  }
  return out;
}

}  // namespace mapda
