#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

#include "mapda/channel.hpp"
#include "mapda/scheme.hpp"

namespace mapda {

class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& message) : std::runtime_error(message) {}
};

// Beamforming vectors of one block, one column per served user in the
// block's user order.
template <class Scalar>
struct PrecoderBlock {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::int64_t block = 0;
  Matrix beamformers;  // L x r_s
};

// Zero-forcing beamformers: the vector of served user i has unit gain at i
// and zero gain at every other member of i's interference group. With p
// group members and p < L antennas the system is underdetermined; the spare
// coordinates are pinned to zero and the square system is solved on the
// lexicographically first nonsingular antenna subset.
template <class Scalar>
PrecoderBlock<Scalar> solve_precoder(const ChannelMatrix<Scalar>& channel,
                                     const BlockPlan& block) {
  using Matrix = typename PrecoderBlock<Scalar>::Matrix;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const std::int64_t antennas = channel.gains.cols();
  const auto served = static_cast<std::int64_t>(block.users.size());
  PrecoderBlock<Scalar> precoder;
  precoder.block = block.block;
  precoder.beamformers = Matrix::Zero(antennas, served);

  for (std::int64_t i = 0; i < served; ++i) {
    const auto& group = block.interference[i];
    const auto p = static_cast<std::int64_t>(group.size());
    if (p > antennas) {
      throw std::invalid_argument("block " + std::to_string(block.block) + ": group of user " +
                                  std::to_string(block.users[i]) + " needs " +
                                  std::to_string(p) + " antennas, channel has " +
                                  std::to_string(antennas));
    }
    Matrix constraints(p, antennas);
    Vector rhs = Vector::Zero(p);
    for (std::int64_t t = 0; t < p; ++t) {
      const std::int64_t user = group[t];
      if (user < 1 || user > channel.gains.rows()) {
        throw std::invalid_argument("block " + std::to_string(block.block) +
                                    ": unknown user " + std::to_string(user));
      }
      constraints.row(t) = channel.gains.row(user - 1);
      if (user == block.users[i]) {
        rhs(t) = scalar_ops<Scalar>::ratio(1, 1);
      }
    }

    std::vector<std::int64_t> columns = detail::first_subset(p);
    bool solved = false;
    do {
      Matrix square(p, p);
      for (std::int64_t t = 0; t < p; ++t) {
        square.col(t) = constraints.col(columns[t]);
      }
      const Eigen::FullPivLU<Matrix> lu(square);
      if (lu.isInvertible()) {
        const Vector solution = lu.solve(rhs);
        for (std::int64_t t = 0; t < p; ++t) {
          precoder.beamformers(columns[t], i) = solution(t);
        }
        solved = true;
        break;
      }
    } while (detail::next_subset(columns, antennas));
    if (!solved) {
      throw SingularSystemError("block " + std::to_string(block.block) + ": user " +
                                std::to_string(block.users[i]) +
                                " has no nonsingular antenna subset");
    }
  }
  return precoder;
}

}  // namespace mapda
