#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapda/coded_array.hpp"
#include "mapda/validate.hpp"

namespace mapda {

// Raised when the lift parameters fall outside the domain where the shifted
// replication scheme produces a valid array (see LiftParams::shift_span).
class LiftError : public std::domain_error {
 public:
  explicit LiftError(const std::string& message) : std::domain_error(message) {}
};

// Derived quantities of the replication lift of a g-regular base array.
//
//   copies   m, horizontal replication count, 1 <= m <= antennas
//   l        m / gcd(m, antennas - m); 1 when antennas == m. Scales the
//            vertical replication so the relabeling splits evenly.
//   sgn_g    1 when antennas == m, else g
//   alpha    (sgn_g + (antennas - copies) / copies) * l; the row count of
//            the lifted array is alpha * F1 (always integral)
struct LiftParams {
  std::int64_t copies = 0;
  std::int64_t antennas = 0;
  std::int64_t regularity = 0;
  std::int64_t l = 1;
  std::int64_t sgn_g = 1;
  std::int64_t alpha = 1;
  PdaParams base;

  // Scale factors alone, for parameter arithmetic without a base array.
  static LiftParams scale(std::int64_t copies, std::int64_t antennas, std::int64_t regularity);

  static LiftParams from(std::int64_t copies, std::int64_t antennas, const PdaParams& base);

  // Rows each base row is replicated into before shifting: l*(L-m)/m.
  // Zero when copies == antennas.
  std::int64_t shift_span() const;

  // Occurrences of every integer in the lifted array: m*(g-1) + L.
  std::int64_t lifted_regularity() const;
};

// Every intermediate stage of the lift. For copies == antennas the lift is
// plain horizontal replication: only q0 and p are populated and p == q0.
//
//   q0  base array replicated m times horizontally, integers untouched
//   p1  q0 + j*S1 stacked vertically for j = 0..g*l-1
//   u   per base row j, shift_span() copies of that row of q0's left block,
//       copy i cyclically right-shifted by i
//   u0  u replicated m times horizontally
//   p2  u0 with occurrence i (row-major, per integer) relabeled to
//       s + floor((i-1)/(L-m)) * S1
//   p   p1 stacked on p2
struct LiftTrace {
  LiftParams params;
  CodedArray q0;
  std::optional<CodedArray> p1;
  std::optional<CodedArray> u;
  std::optional<CodedArray> u0;
  std::optional<CodedArray> p2;
  CodedArray p;
};

// Lifts a regular single-antenna array to `antennas` transmitters by
// horizontal replication, vertical shifted replication, and relabeling.
// Throws ValidationError when q is not a valid single-antenna array,
// std::invalid_argument when it is irregular or copies/antennas are out of
// range, and LiftError when the shift schedule cannot avoid collisions
// (shift_span() must stay below the least integer count among occupied
// rows of q).
LiftTrace lift_regular_pda(const CodedArray& q, std::int64_t copies, std::int64_t antennas);

// The subset array of mn_pda(users, t) lifted to `antennas` with the given
// replication count.
LiftTrace mn_mapda(std::int64_t users, std::int64_t t, std::int64_t copies,
                   std::int64_t antennas);

// Structural audit of a finished lift trace. Statements 2 and 3 concern the
// interplay of p1 and p2 and hold vacuously when copies == antennas.
struct LiftAudit {
  // Every integer of p occurs in lifted_regularity() distinct columns.
  bool distinct_columns = false;
  // Every p1 row of the subarray induced by an integer s present in that row
  // carries at least m*(g-1) stars.
  bool p1_star_budget = false;
  bool p1_vacuous = false;
  // Every p2 row containing s matches the star pattern of some p1 row
  // containing s on the subarray columns.
  bool p2_star_match = false;
  bool p2_vacuous = false;
  std::vector<std::string> failures;

  bool passed() const { return distinct_columns && p1_star_budget && p2_star_match; }
};

LiftAudit audit_lift(const LiftTrace& trace);

}  // namespace mapda
