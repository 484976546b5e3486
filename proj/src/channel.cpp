#include "mapda/channel.hpp"

#include <Eigen/SVD>

namespace mapda {
namespace {

constexpr double kMaxCondition = 1e8;
constexpr int kMaxAttempts = 64;
constexpr std::int64_t kMaxMinors = 5'000'000;

// Largest over smallest singular value; infinite when singular.
double condition_number(const Eigen::MatrixXcd& m) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sigma = svd.singularValues();
  const double smallest = sigma(sigma.size() - 1);
  if (smallest <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sigma(0) / smallest;
}

bool all_minors_well_conditioned(const Eigen::MatrixXcd& gains, std::int64_t antennas) {
  const std::int64_t users = gains.rows();
  if (users < antennas) {
    return true;  // no full square minors to screen
  }
  std::vector<std::int64_t> rows = detail::first_subset(antennas);
  do {
    Eigen::MatrixXcd minor(antennas, antennas);
    for (std::int64_t i = 0; i < antennas; ++i) {
      minor.row(i) = gains.row(rows[i]);
    }
    if (condition_number(minor) > kMaxCondition) {
      return false;
    }
  } while (detail::next_subset(rows, users));
  return true;
}

mpz_class minor_count(std::int64_t users, std::int64_t antennas) {
  if (users < antennas) {
    return 0;
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(users),
               static_cast<unsigned long>(antennas));
  return out;
}

}  // namespace

ChannelMatrix<std::complex<double>> make_gaussian_channel(std::int64_t users,
                                                          std::int64_t antennas,
                                                          std::uint64_t seed) {
  if (users < 1 || antennas < 1) {
    throw std::invalid_argument("channel: need users >= 1 and antennas >= 1");
  }
  if (minor_count(users, antennas) > kMaxMinors) {
    throw std::invalid_argument(
        "gaussian channel: condition screening over " +
        minor_count(users, antennas).get_str() + " minors is out of range");
  }

  ChannelMatrix<std::complex<double>> channel;
  channel.kind = ChannelKind::gaussian;
  channel.seed = seed;
  channel.gains.resize(users, antennas);

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> component(0.0, 1.0 / std::sqrt(2.0));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::int64_t k = 0; k < users; ++k) {
      for (std::int64_t i = 0; i < antennas; ++i) {
        const double re = component(engine);
        const double im = component(engine);
        channel.gains(k, i) = {re, im};
      }
    }
    if (all_minors_well_conditioned(channel.gains, antennas)) {
      return channel;
    }
  }
  throw std::runtime_error("gaussian channel: no well-conditioned draw after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace mapda
