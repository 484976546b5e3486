#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mapda/rational.hpp"
#include "mapda/validate.hpp"

namespace mapda {

// Raised when audit bookkeeping contradicts itself on an array that already
// passed validation; that always indicates a validator or audit bug.
class AuditError : public std::logic_error {
 public:
  explicit AuditError(const std::string& message) : std::logic_error(message) {}
};

// Star bookkeeping over a validated multiple-antenna array. For block s with
// occurrences i = 1..r_s in rows f_i, row_integer_counts[s-1][i-1] is the
// number of integer entries in row f_i of the subarray induced by s; the
// stars that the delivery of s leans on total stars_used. stars_available is
// the same budget counted per row of the full array.
struct StarAudit {
  MapdaParams params;
  std::int64_t integer_entries = 0;                           // n
  std::vector<std::int64_t> occurrences;                      // r_s, by block
  std::vector<std::vector<std::int64_t>> row_integer_counts;  // r_{s,i}, by occurrence
  std::vector<std::int64_t> row_totals;                       // integer entries per row
  std::int64_t stars_used = 0;                                // M
  std::int64_t stars_available = 0;                           // M'
  Rational min_blocks;       // lower bound n*F / (F*L + K*F - n)
  Rational dof_bound;        // K*Z/F + L
  Rational achieved_dof;     // K*(F-Z) / S
  bool meets_bound_with_equality = false;
};

// Audits a validated array: recomputes the star bookkeeping, verifies
// stars_used <= stars_available and blocks >= min_blocks (violations raise
// AuditError), and reports achieved degrees of freedom against the bound.
StarAudit star_audit(const CodedArray& a, std::int64_t antennas);

// Sum degrees of freedom K*(F-Z)/S of an array with the given parameters.
Rational sum_dof(const MapdaParams& params);

}  // namespace mapda
