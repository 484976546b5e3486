#include "mapda/lift.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mapda/constructions.hpp"

namespace mapda {
namespace {

std::vector<Entry> row_of(const CodedArray& a, std::int64_t f) {
  std::vector<Entry> row(a.cols());
  for (std::int64_t k = 0; k < a.cols(); ++k) {
    row[k] = a.at(f, k);
  }
  return row;
}

// q replicated `copies` times side by side, integers untouched.
CodedArray replicate_horizontally(const CodedArray& q, std::int64_t copies) {
  CodedArray out(q.rows(), q.cols() * copies);
  for (std::int64_t c = 0; c < copies; ++c) {
    out.grid().block(0, c * q.cols(), q.rows(), q.cols()) = q.grid();
  }
  return out;
}

}  // namespace

LiftParams LiftParams::scale(std::int64_t copies, std::int64_t antennas,
                             std::int64_t regularity) {
  if (copies < 1) {
    throw std::invalid_argument("lift: replication count must be >= 1, got " +
                                std::to_string(copies));
  }
  if (copies > antennas) {
    throw std::invalid_argument("lift: replication count " + std::to_string(copies) +
                                " exceeds antenna count " + std::to_string(antennas));
  }
  if (regularity < 1) {
    throw std::invalid_argument("lift: regularity must be >= 1, got " +
                                std::to_string(regularity));
  }
  LiftParams params;
  params.copies = copies;
  params.antennas = antennas;
  params.regularity = regularity;
  if (copies == antennas) {
    params.l = 1;
    params.sgn_g = 1;
  } else {
    params.l = copies / std::gcd(copies, antennas - copies);
    params.sgn_g = regularity;
  }
  // alpha = (sgn_g + (L-m)/m) * l; the division is exact after scaling by l.
  params.alpha = params.sgn_g * params.l + (antennas - copies) * params.l / copies;
  return params;
}

LiftParams LiftParams::from(std::int64_t copies, std::int64_t antennas, const PdaParams& base) {
  if (!base.regularity) {
    throw std::invalid_argument("lift: base array is irregular");
  }
  LiftParams params = scale(copies, antennas, *base.regularity);
  params.base = base;
  return params;
}

std::int64_t LiftParams::shift_span() const {
  return l * (antennas - copies) / copies;
}

std::int64_t LiftParams::lifted_regularity() const {
  return copies * (regularity - 1) + antennas;
}

LiftTrace lift_regular_pda(const CodedArray& q, std::int64_t copies, std::int64_t antennas) {
  const PdaParams base = validate_pda(q);
  const LiftParams params = LiftParams::from(copies, antennas, base);
  const std::int64_t base_blocks = base.blocks;

  CodedArray q0 = replicate_horizontally(q, copies);
  if (copies == antennas) {
    CodedArray p = q0;
    return LiftTrace{params, std::move(q0), std::nullopt, std::nullopt,
                     std::nullopt, std::nullopt, std::move(p)};
  }

  // The shift schedule walks 1..shift_span() through each row's integer
  // positions; a shift that is a multiple of the integer count would leave
  // the row unshifted and collide with p1 in the final stack.
  const std::int64_t span = params.shift_span();
  for (std::int64_t f = 0; f < q.rows(); ++f) {
    std::int64_t integers = 0;
    for (std::int64_t k = 0; k < q.cols(); ++k) {
      if (!q.is_star(f, k)) {
        ++integers;
      }
    }
    if (integers > 0 && span >= integers) {
      throw LiftError(
          "lift: shift span " + std::to_string(span) + " needs rows with more than " +
          std::to_string(span) + " integer entries, row " + std::to_string(f + 1) + " has " +
          std::to_string(integers) +
          "; the target occurrence count m*(g-1)+L = " +
          std::to_string(params.lifted_regularity()) + " is unreachable for these parameters");
    }
  }

  // p1: q0 + j*S1 stacked for j = 0..g*l-1.
  const std::int64_t stack = params.regularity * params.l;
  CodedArray p1(q0.rows() * stack, q0.cols());
  for (std::int64_t j = 0; j < stack; ++j) {
    for (std::int64_t f = 0; f < q0.rows(); ++f) {
      for (std::int64_t k = 0; k < q0.cols(); ++k) {
        const std::int64_t code = q0.code(f, k);
        if (code != Entry::kStarCode) {
          p1.set(j * q0.rows() + f, k, Entry::integer(code + j * base_blocks));
        }
      }
    }
  }

  // u: per base row, span copies cyclically right-shifted by 1..span.
  CodedArray u(q.rows() * span, q.cols());
  for (std::int64_t f = 0; f < q.rows(); ++f) {
    const std::vector<Entry> source = row_of(q, f);
    for (std::int64_t i = 1; i <= span; ++i) {
      const std::vector<Entry> shifted = right_shift_row(source, i);
      for (std::int64_t k = 0; k < q.cols(); ++k) {
        u.set(f * span + (i - 1), k, shifted[k]);
      }
    }
  }

  CodedArray u0 = replicate_horizontally(u, copies);

  // p2: occurrence i (row-major, 1-based, per integer) of s becomes
  // s + floor((i-1) / (L-m)) * S1.
  CodedArray p2 = u0;
  std::vector<std::int64_t> seen(base_blocks + 1, 0);
  const std::int64_t group = antennas - copies;
  for (std::int64_t f = 0; f < p2.rows(); ++f) {
    for (std::int64_t k = 0; k < p2.cols(); ++k) {
      const std::int64_t s = p2.code(f, k);
      if (s != Entry::kStarCode) {
        p2.set(f, k, Entry::integer(s + (seen[s] / group) * base_blocks));
        ++seen[s];
      }
    }
  }

  CodedArray p(p1.rows() + p2.rows(), p1.cols());
  p.grid().topRows(p1.rows()) = p1.grid();
  p.grid().bottomRows(p2.rows()) = p2.grid();

  LiftTrace trace{params,        std::move(q0), std::move(p1), std::move(u),
                  std::move(u0), std::move(p2), std::move(p)};

  // Postcondition: the lifted array is a valid multiple-antenna array with
  // uniform regularity m*(g-1)+L. The shift-span guard above makes this
  // unconditional; a failure here is a construction bug.
  const MapdaParams lifted = validate_mapda(trace.p, antennas);
  if (!lifted.regularity || *lifted.regularity != params.lifted_regularity()) {
    throw LiftError("lift: constructed array is not uniformly " +
                    std::to_string(params.lifted_regularity()) + "-regular");
  }
  return trace;
}

LiftTrace mn_mapda(std::int64_t users, std::int64_t t, std::int64_t copies,
                   std::int64_t antennas) {
  return lift_regular_pda(mn_pda(users, t), copies, antennas);
}

LiftAudit audit_lift(const LiftTrace& trace) {
  LiftAudit audit;
  const CodedArray& p = trace.p;
  const std::int64_t target = trace.params.lifted_regularity();
  const auto occ = block_occurrences(p);

  audit.distinct_columns = true;
  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    std::set<std::int64_t> cols;
    for (const Position q : occ[s0]) {
      cols.insert(q.col);
    }
    if (static_cast<std::int64_t>(cols.size()) != target) {
      audit.distinct_columns = false;
      audit.failures.push_back("integer " + std::to_string(s0 + 1) + " spans " +
                               std::to_string(cols.size()) + " columns, expected " +
                               std::to_string(target));
    }
  }

  if (trace.params.copies == trace.params.antennas) {
    audit.p1_vacuous = true;
    audit.p2_vacuous = true;
    audit.p1_star_budget = true;
    audit.p2_star_match = true;
    return audit;
  }

  const std::int64_t p1_rows = trace.p1->rows();
  const std::int64_t star_floor = trace.params.copies * (trace.params.regularity - 1);

  audit.p1_star_budget = true;
  audit.p2_star_match = true;
  for (std::size_t s0 = 0; s0 < occ.size(); ++s0) {
    const auto s = static_cast<std::int64_t>(s0 + 1);
    const SubarrayView view = subarray_around(p, occ[s0]);
    for (std::int64_t i = 0; i < view.row_count(); ++i) {
      const std::int64_t f = view.row_indices()[i];
      if (f >= p1_rows) {
        continue;
      }
      std::int64_t stars = 0;
      for (std::int64_t j = 0; j < view.col_count(); ++j) {
        if (view.at(i, j).is_star()) {
          ++stars;
        }
      }
      if (stars < star_floor) {
        audit.p1_star_budget = false;
        audit.failures.push_back("p1 row " + std::to_string(f + 1) + " of subarray " +
                                 std::to_string(s) + " has " + std::to_string(stars) +
                                 " stars, floor is " + std::to_string(star_floor));
      }
    }

    // A p2 row containing s must replicate the star pattern of a p1 row
    // containing s, across the full width of the array.
    for (const Position q : occ[s0]) {
      const std::int64_t f = q.row - 1;
      if (f < p1_rows) {
        continue;
      }
      bool matched = false;
      for (const Position candidate : occ[s0]) {
        const std::int64_t f1 = candidate.row - 1;
        if (f1 >= p1_rows) {
          continue;
        }
        bool same_stars = true;
        for (std::int64_t k = 0; k < p.cols(); ++k) {
          if (p.is_star(f1, k) != p.is_star(f, k)) {
            same_stars = false;
            break;
          }
        }
        if (same_stars) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        audit.p2_star_match = false;
        audit.failures.push_back("p2 row " + std::to_string(f + 1) + " containing integer " +
                                 std::to_string(s) + " matches no p1 row's star pattern");
      }
    }
  }
  return audit;
}

}  // namespace mapda
