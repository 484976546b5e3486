#include "mapda/subpacketization.hpp"

#include <numeric>
#include <stdexcept>

#include "mapda/lift.hpp"

namespace mapda {
namespace {

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational exact(const mpz_class& value) {
  Rational out(value);
  out.canonicalize();
  return out;
}

ComparisonRow inapplicable(Scheme scheme, std::string note) {
  ComparisonRow row;
  row.scheme = scheme;
  row.applicable = false;
  row.note = std::move(note);
  return row;
}

ComparisonRow applicable(Scheme scheme, Rational value) {
  ComparisonRow row;
  row.scheme = scheme;
  row.applicable = true;
  row.integral = value.get_den() == 1;
  row.value = std::move(value);
  return row;
}

}  // namespace

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::nma: return "nma";
    case Scheme::sch: return "sch";
    case Scheme::ep: return "ep";
    case Scheme::spset: return "spset";
    case Scheme::mb: return "mb";
    case Scheme::lift: return "lift";
  }
  return "unknown";
}

std::vector<ComparisonRow> compare_subpacketization(std::int64_t users, std::int64_t antennas,
                                                    std::int64_t t,
                                                    std::optional<std::int64_t> copies) {
  if (users < 1 || antennas < 1) {
    throw std::invalid_argument("compare: need users >= 1 and antennas >= 1");
  }
  if (t < 1 || t > users) {
    throw std::invalid_argument("compare: need 1 <= t <= K, got t=" + std::to_string(t));
  }

  std::vector<ComparisonRow> rows;

  // nma: C(K,t) * t! * (K-t-1)! / (K-t-L)!, the falling product form.
  if (users - t - antennas < 0) {
    rows.push_back(inapplicable(Scheme::nma, "needs t <= K - L"));
  } else {
    mpz_class value = binomial(users, t);
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(t));
    value *= factorial;
    for (std::int64_t j = users - t - antennas + 1; j <= users - t - 1; ++j) {
      value *= j;
    }
    rows.push_back(applicable(Scheme::nma, exact(value)));
  }

  // sch: C(K,t) * C(K-t-1, L-1).
  if (antennas > users - t) {
    rows.push_back(inapplicable(Scheme::sch, "needs L <= K - t"));
  } else {
    rows.push_back(
        applicable(Scheme::sch, exact(binomial(users, t) * binomial(users - t - 1, antennas - 1))));
  }

  // ep: C(K/L, t/L) when L divides both.
  if (users % antennas != 0 || t % antennas != 0) {
    rows.push_back(inapplicable(Scheme::ep, "needs L | K and L | t"));
  } else {
    rows.push_back(applicable(Scheme::ep, exact(binomial(users / antennas, t / antennas))));
  }

  // spset: K*(t+L)/gcd(K,t,L)^2 when t <= L; exact rational, possibly
  // fractional.
  if (t > antennas) {
    rows.push_back(inapplicable(Scheme::spset, "needs t <= L"));
  } else {
    const std::int64_t g = std::gcd(users, std::gcd(t, antennas));
    ComparisonRow row = applicable(Scheme::spset, make_rational(users * (t + antennas), g * g));
    if (!row.integral) {
      row.note = "non-integral";
    }
    rows.push_back(std::move(row));
  }

  // mb: C(K,t) when (t+1) divides (t+L).
  if ((t + antennas) % (t + 1) != 0) {
    rows.push_back(inapplicable(Scheme::mb, "needs (t+1) | (t+L)"));
  } else {
    rows.push_back(applicable(Scheme::mb, exact(binomial(users, t))));
  }

  // lift: alpha * C(K/m, t/m) for replication count m dividing K and t.
  if (!copies) {
    rows.push_back(inapplicable(Scheme::lift, "needs the replication count m"));
  } else if (*copies < 1 || *copies > antennas) {
    rows.push_back(inapplicable(Scheme::lift, "needs 1 <= m <= L"));
  } else if (users % *copies != 0 || t % *copies != 0) {
    rows.push_back(inapplicable(Scheme::lift, "needs m | K and m | t"));
  } else if (t / *copies >= users / *copies) {
    rows.push_back(inapplicable(Scheme::lift, "needs t < K"));
  } else {
    const std::int64_t m = *copies;
    const LiftParams params = LiftParams::scale(m, antennas, t / m + 1);
    rows.push_back(applicable(
        Scheme::lift, exact(params.alpha * binomial(users / m, t / m))));
  }

  return rows;
}

std::string render_comparison(const std::vector<ComparisonRow>& rows) {
  std::string out = "scheme subpacketization\n";
  for (const ComparisonRow& row : rows) {
    out += scheme_name(row.scheme);
    if (row.applicable) {
      out += " " + to_string(row.value);
      if (!row.note.empty()) {
        out += " (" + row.note + ")";
      }
    } else {
      out += " n/a (" + row.note + ")";
    }
    out += "\n";
  }
  return out;
}

std::string sweep_csv(std::int64_t users, std::int64_t antennas,
                      std::optional<std::int64_t> copies) {
  std::string out = "t,scheme,subpacketization\n";
  for (std::int64_t t = 1; t < users; ++t) {
    for (const ComparisonRow& row : compare_subpacketization(users, antennas, t, copies)) {
      if (row.applicable) {
        out += std::to_string(t);
        out += ",";
        out += scheme_name(row.scheme);
        out += ",";
        out += to_string(row.value);
        out += "\n";
      }
    }
  }
  return out;
}

}  // namespace mapda
