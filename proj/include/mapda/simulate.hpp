#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapda/audit.hpp"
#include "mapda/precoder.hpp"
#include "mapda/scheme.hpp"
#include "mapda/text_format.hpp"

namespace mapda {

struct DecodeFailure {
  std::int64_t block = 0;
  std::int64_t user = 0;
  PacketId packet;
  std::string coefficient;
};

// Outcome of one delivery run: per block the zero-forcing beamformers, the
// effective matrix R = H_s * V (entry (i, j) is the gain of served user j's
// stream at served user i), and per served user whether cache subtraction
// leaves exactly the demanded packet with unit coefficient.
template <class Scalar>
struct SimulationReport {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  MapdaParams params;
  ChannelKind kind = ChannelKind::cauchy;
  std::uint64_t seed = 0;
  double tolerance = 0.0;  // 0 in exact mode
  DeliveryPlan plan;
  std::vector<PrecoderBlock<Scalar>> precoders;
  std::vector<Matrix> effective;
  std::vector<std::vector<bool>> decoded;
  std::vector<DecodeFailure> failures;
  std::int64_t served_total = 0;
  Rational measured_dof;
  bool all_decoded = false;

  static constexpr bool exact = scalar_ops<Scalar>::exact;
};

// Runs the full pipeline: validate for L antennas, place caches, read the
// delivery plan, draw the channel, zero-force every block, and verify every
// served user's decode symbolically (packets as formal basis vectors; the
// residue after cache subtraction must be the demanded packet alone).
template <class Scalar>
SimulationReport<Scalar> simulate(const CodedArray& a, std::int64_t antennas,
                                  const std::vector<std::int64_t>& demands, std::int64_t files,
                                  ChannelKind kind, std::uint64_t seed,
                                  double tolerance = 1e-9) {
  SimulationReport<Scalar> report;
  report.params = validate_mapda(a, antennas);
  report.kind = kind;
  report.seed = seed;
  report.tolerance = scalar_ops<Scalar>::exact ? 0.0 : tolerance;

  const std::vector<CacheState> caches = place(a, files);
  report.plan = plan_delivery(a, demands, files);
  const ChannelMatrix<Scalar> channel =
      make_channel<Scalar>(kind, report.params.users, antennas, seed);

  for (const BlockPlan& block : report.plan.blocks) {
    const auto served = static_cast<std::int64_t>(block.users.size());
    PrecoderBlock<Scalar> precoder = solve_precoder(channel, block);

    typename SimulationReport<Scalar>::Matrix rows(served, antennas);
    for (std::int64_t i = 0; i < served; ++i) {
      rows.row(i) = channel.gains.row(block.users[i] - 1);
    }
    typename SimulationReport<Scalar>::Matrix effective = rows * precoder.beamformers;

    std::vector<bool> block_decoded(served, true);
    for (std::int64_t i = 0; i < served; ++i) {
      const std::int64_t user = block.users[i];
      const CacheState& cache = caches[user - 1];
      const PacketId wanted{report.plan.demands[user - 1], block.packet_rows[i]};

      // Symbolic received combination after cache subtraction.
      std::map<PacketId, Scalar> residue;
      for (std::int64_t j = 0; j < served; ++j) {
        const PacketId sent{report.plan.demands[block.users[j] - 1], block.packet_rows[j]};
        if (!cache.contains(sent)) {
          residue[sent] += effective(i, j);
        }
      }

      bool ok = true;
      if (residue.count(wanted) == 0) {
        ok = false;
        report.failures.push_back(DecodeFailure{block.block, user, wanted, "missing"});
      }
      for (const auto& [packet, coefficient] : residue) {
        const std::int64_t target = packet == wanted ? 1 : 0;
        if (!scalar_ops<Scalar>::near(coefficient, target, report.tolerance)) {
          ok = false;
          report.failures.push_back(DecodeFailure{block.block, user, packet,
                                                  scalar_ops<Scalar>::str(coefficient)});
        }
      }
      block_decoded[i] = ok;
    }

    report.served_total += served;
    report.precoders.push_back(std::move(precoder));
    report.effective.push_back(std::move(effective));
    report.decoded.push_back(std::move(block_decoded));
  }

  report.measured_dof =
      make_rational(report.served_total, static_cast<std::int64_t>(report.plan.blocks.size()));
  report.all_decoded = report.failures.empty();
  for (const auto& block : report.decoded) {
    for (const bool ok : block) {
      report.all_decoded = report.all_decoded && ok;
    }
  }
  return report;
}

// Structured text: header with mode, channel, and seed; per block the served
// users and the effective matrix (exact entries as p/q); a summary line with
// the measured sum degrees of freedom and the decode verdict.
template <class Scalar>
std::string render_report(const SimulationReport<Scalar>& report) {
  std::string out = "simulation channel=";
  out += channel_name(report.kind);
  out += report.exact ? " mode=exact" : " mode=float";
  out += " seed=" + std::to_string(report.seed);
  out += " users=" + std::to_string(report.params.users) +
         " antennas=" + std::to_string(report.params.antennas) +
         " packets=" + std::to_string(report.params.packets) +
         " stars=" + std::to_string(report.params.stars) +
         " blocks=" + std::to_string(report.params.blocks) +
         " files=" + std::to_string(report.plan.files) + "\n";
  out += "demands";
  for (const std::int64_t d : report.plan.demands) {
    out += " " + std::to_string(d);
  }
  out += "\n";
  for (std::size_t b = 0; b < report.plan.blocks.size(); ++b) {
    const BlockPlan& block = report.plan.blocks[b];
    out += "block " + std::to_string(block.block) + " users";
    for (const std::int64_t user : block.users) {
      out += " " + std::to_string(user);
    }
    bool ok = true;
    for (const bool flag : report.decoded[b]) {
      ok = ok && flag;
    }
    out += ok ? " decoded=yes" : " decoded=NO";
    out += "\n";
    const auto& effective = report.effective[b];
    for (Eigen::Index i = 0; i < effective.rows(); ++i) {
      out += "  effective";
      for (Eigen::Index j = 0; j < effective.cols(); ++j) {
        out += " " + scalar_ops<Scalar>::str(effective(i, j));
      }
      out += "\n";
    }
  }
  for (const DecodeFailure& failure : report.failures) {
    out += "decode-failure block=" + std::to_string(failure.block) +
           " user=" + std::to_string(failure.user) + " packet=" +
           std::to_string(failure.packet.file) + "," + std::to_string(failure.packet.packet) +
           " coefficient=" + failure.coefficient + "\n";
  }
  out += "summary served=" + std::to_string(report.served_total) +
         " blocks=" + std::to_string(report.plan.blocks.size()) +
         " sum-dof=" + to_string(report.measured_dof) +
         (report.all_decoded ? " decode=ok" : " decode=FAILED") + "\n";
  return out;
}

}  // namespace mapda
