#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapda/rational.hpp"

namespace mapda {

// Reference subpacketization formulas for K users, L antennas, and cached
// fraction t/K. Tags name the published schemes the formulas come from; the
// lifted-construction row is `lift`.
enum class Scheme { nma, sch, ep, spset, mb, lift };

const char* scheme_name(Scheme scheme);

struct ComparisonRow {
  Scheme scheme = Scheme::nma;
  bool applicable = false;
  Rational value;          // meaningful only when applicable
  bool integral = true;    // spset can be fractional
  std::string note;        // why a row is inapplicable, or a warning
};

// All six rows in a fixed order. `copies` (the lift's m) gates the lift row:
// it must divide both K and t and stay within L. Values are exact; rows are
// marked inapplicable when a formula's precondition fails.
std::vector<ComparisonRow> compare_subpacketization(std::int64_t users, std::int64_t antennas,
                                                    std::int64_t t,
                                                    std::optional<std::int64_t> copies);

// Aligned "scheme value [note]" lines.
std::string render_comparison(const std::vector<ComparisonRow>& rows);

// CSV sweep over t = 1..K-1 with header "t,scheme,subpacketization"; only
// applicable rows are emitted.
std::string sweep_csv(std::int64_t users, std::int64_t antennas,
                      std::optional<std::int64_t> copies);

}  // namespace mapda
