#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "mapda/detail/subsets.hpp"
#include "mapda/rational.hpp"

namespace mapda {

enum class ChannelKind { cauchy, vandermonde, gaussian };

inline const char* channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::cauchy: return "cauchy";
    case ChannelKind::vandermonde: return "vandermonde";
    case ChannelKind::gaussian: return "gaussian";
  }
  return "unknown";
}

inline ChannelKind channel_from_name(const std::string& name) {
  if (name == "cauchy") return ChannelKind::cauchy;
  if (name == "vandermonde") return ChannelKind::vandermonde;
  if (name == "gaussian") return ChannelKind::gaussian;
  throw std::invalid_argument("unknown channel \"" + name + "\"");
}

// Uniform scalar interface of the two simulation modes: exact rationals and
// complex floating point. `near` is the decode comparison; in exact mode the
// tolerance is ignored and comparison is equality.
template <class Scalar>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
  static constexpr bool exact = true;

  static Rational ratio(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

  static std::string str(const Rational& x) { return to_string(x); }

  static bool near(const Rational& x, std::int64_t target, double) {
    return x == Rational(static_cast<long>(target));
  }
};

template <>
struct scalar_ops<std::complex<double>> {
  static constexpr bool exact = false;

  static std::complex<double> ratio(std::int64_t num, std::int64_t den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }

  static std::string str(const std::complex<double>& x) {
    std::string out = std::to_string(x.real());
    out += x.imag() < 0 ? "-" : "+";
    out += std::to_string(std::abs(x.imag())) + "i";
    return out;
  }

  static bool near(const std::complex<double>& x, std::int64_t target, double tol) {
    return std::abs(x - std::complex<double>(static_cast<double>(target), 0.0)) <= tol;
  }
};

// Channel gains of K single-antenna users facing an L-antenna transmitter.
template <class Scalar>
struct ChannelMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix gains;  // K x L
  ChannelKind kind = ChannelKind::cauchy;
  std::uint64_t seed = 0;
};

// gains(k, i) = 1 / (x_k + y_i) with x_k = k and y_i = K + i (1-based k, i):
// parameters are pairwise distinct, so every square minor is nonsingular.
template <class Scalar>
ChannelMatrix<Scalar> make_cauchy_channel(std::int64_t users, std::int64_t antennas) {
  if (users < 1 || antennas < 1) {
    throw std::invalid_argument("channel: need users >= 1 and antennas >= 1");
  }
  ChannelMatrix<Scalar> channel;
  channel.kind = ChannelKind::cauchy;
  channel.gains.resize(users, antennas);
  for (std::int64_t k = 0; k < users; ++k) {
    for (std::int64_t i = 0; i < antennas; ++i) {
      channel.gains(k, i) = scalar_ops<Scalar>::ratio(1, (k + 1) + users + (i + 1));
    }
  }
  return channel;
}

// gains(k, i) = k^(i-1) (1-based k, i): distinct positive nodes make every
// square minor of the rectangular Vandermonde matrix nonsingular.
template <class Scalar>
ChannelMatrix<Scalar> make_vandermonde_channel(std::int64_t users, std::int64_t antennas) {
  if (users < 1 || antennas < 1) {
    throw std::invalid_argument("channel: need users >= 1 and antennas >= 1");
  }
  ChannelMatrix<Scalar> channel;
  channel.kind = ChannelKind::vandermonde;
  channel.gains.resize(users, antennas);
  for (std::int64_t k = 0; k < users; ++k) {
    channel.gains(k, 0) = scalar_ops<Scalar>::ratio(1, 1);
    for (std::int64_t i = 1; i < antennas; ++i) {
      channel.gains(k, i) = channel.gains(k, i - 1) * scalar_ops<Scalar>::ratio(k + 1, 1);
    }
  }
  return channel;
}

// I.i.d. standard complex normal entries from a seeded generator; a draw is
// rejected and redrawn while any L x L minor has condition number above
// 1e8, so every run with the same seed sees the same matrix.
ChannelMatrix<std::complex<double>> make_gaussian_channel(std::int64_t users,
                                                          std::int64_t antennas,
                                                          std::uint64_t seed);

template <class Scalar>
ChannelMatrix<Scalar> make_channel(ChannelKind kind, std::int64_t users, std::int64_t antennas,
                                   std::uint64_t seed) {
  ChannelMatrix<Scalar> channel;
  switch (kind) {
    case ChannelKind::cauchy:
      channel = make_cauchy_channel<Scalar>(users, antennas);
      break;
    case ChannelKind::vandermonde:
      channel = make_vandermonde_channel<Scalar>(users, antennas);
      break;
    case ChannelKind::gaussian:
      if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
        channel = make_gaussian_channel(users, antennas, seed);
      } else {
        throw std::invalid_argument("gaussian channels exist only in float mode");
      }
      break;
  }
  channel.seed = seed;
  return channel;
}

}  // namespace mapda
