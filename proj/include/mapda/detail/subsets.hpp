#pragma once

#include <cstdint>
#include <vector>

namespace mapda::detail {

inline std::vector<std::int64_t> first_subset(std::int64_t size) {
  std::vector<std::int64_t> subset(size);
  for (std::int64_t i = 0; i < size; ++i) {
    subset[i] = i;
  }
  return subset;
}

// Advances to the lexicographically next size-|subset| subset of [0..n);
// returns false after the last one.
inline bool next_subset(std::vector<std::int64_t>& subset, std::int64_t n) {
  const auto size = static_cast<std::int64_t>(subset.size());
  for (std::int64_t i = size - 1; i >= 0; --i) {
    if (subset[i] < n - size + i) {
      ++subset[i];
      for (std::int64_t j = i + 1; j < size; ++j) {
        subset[j] = subset[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace mapda::detail
