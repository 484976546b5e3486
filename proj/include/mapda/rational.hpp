#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

// Exact rational scalar for Eigen dense types. GMP's mpq_class carries
// arbitrary-precision canonical fractions; epsilon and dummy_precision are
// exactly zero so pivoting decisions degrade to exact nonzero tests.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;

  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace mapda {

using Rational = mpq_class;

// Canonical p/q. The two-argument mpq_class constructor does not reduce, so
// every ratio built from parts goes through here.
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace mapda
