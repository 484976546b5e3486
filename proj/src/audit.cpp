#include "mapda/audit.hpp"

#include <algorithm>

namespace mapda {

Rational sum_dof(const MapdaParams& params) {
  return make_rational(params.users * (params.packets - params.stars), params.blocks);
}

StarAudit star_audit(const CodedArray& a, std::int64_t antennas) {
  StarAudit audit;
  audit.params = validate_mapda(a, antennas);
  const std::int64_t users = audit.params.users;
  const std::int64_t packets = audit.params.packets;
  const std::int64_t blocks = audit.params.blocks;

  audit.row_totals.assign(packets, 0);
  for (std::int64_t f = 0; f < packets; ++f) {
    audit.row_totals[f] = (a.grid().row(f).array() != Entry::kStarCode).count();
    audit.integer_entries += audit.row_totals[f];
    // Every non-star entry of row f pairs with the stars of the other users
    // in that row.
    audit.stars_available += audit.row_totals[f] * (users - audit.row_totals[f]);
  }

  const auto occ = block_occurrences(a);
  audit.occurrences.assign(blocks, 0);
  audit.row_integer_counts.assign(blocks, {});
  std::int64_t occurrence_total = 0;
  for (std::int64_t s = 1; s <= blocks; ++s) {
    // Occurrences in ascending column order, mirroring the order in which
    // the delivery of block s serves users.
    std::vector<Position> by_user = occ[s - 1];
    std::sort(by_user.begin(), by_user.end(),
              [](Position x, Position y) { return x.col < y.col; });
    const SubarrayView view = subarray_around(a, by_user);

    std::vector<std::int64_t> integers_in_view_row(view.row_count(), 0);
    for (std::int64_t i = 0; i < view.row_count(); ++i) {
      for (std::int64_t j = 0; j < view.col_count(); ++j) {
        if (view.at(i, j).is_integer()) {
          ++integers_in_view_row[i];
        }
      }
    }

    const auto r_s = static_cast<std::int64_t>(by_user.size());
    audit.occurrences[s - 1] = r_s;
    occurrence_total += r_s;
    const auto& view_rows = view.row_indices();
    for (const Position p : by_user) {
      const auto it = std::lower_bound(view_rows.begin(), view_rows.end(), p.row - 1);
      const std::int64_t in_row = integers_in_view_row[it - view_rows.begin()];
      audit.row_integer_counts[s - 1].push_back(in_row);
      audit.stars_used += r_s - in_row;
    }
  }

  if (occurrence_total != audit.integer_entries) {
    throw AuditError("occurrence total " + std::to_string(occurrence_total) +
                     " does not match integer entry count " +
                     std::to_string(audit.integer_entries));
  }
  if (audit.stars_used > audit.stars_available) {
    throw AuditError("stars used " + std::to_string(audit.stars_used) +
                     " exceed stars available " + std::to_string(audit.stars_available));
  }

  // blocks >= n*F / (F*L + K*F - n), compared cross-multiplied to stay in
  // integers. The denominator is positive because n <= K*F and L >= 1.
  const std::int64_t denominator =
      packets * antennas + users * packets - audit.integer_entries;
  if (denominator <= 0) {
    throw AuditError("nonpositive block bound denominator " + std::to_string(denominator));
  }
  audit.min_blocks = make_rational(audit.integer_entries * packets, denominator);
  if (blocks * denominator < audit.integer_entries * packets) {
    throw AuditError("block count " + std::to_string(blocks) +
                     " falls below the lower bound " + to_string(audit.min_blocks));
  }

  audit.dof_bound =
      make_rational(users * audit.params.stars, packets) + Rational(static_cast<long>(antennas));
  audit.achieved_dof = sum_dof(audit.params);
  audit.meets_bound_with_equality = audit.achieved_dof == audit.dof_bound;
  return audit;
}

}  // namespace mapda
