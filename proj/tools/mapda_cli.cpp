#include <CLI11.hpp>

#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mapda/audit.hpp"
#include "mapda/constructions.hpp"
#include "mapda/lift.hpp"
#include "mapda/simulate.hpp"
#include "mapda/subpacketization.hpp"
#include "mapda/text_format.hpp"
#include "mapda/validate.hpp"

namespace {

using namespace mapda;

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + output);
  }
  out << text;
}

std::string regularity_suffix(const std::optional<std::int64_t>& g) {
  return g ? " g=" + std::to_string(*g) : "";
}

std::string params_line(const PdaParams& params) {
  return "PDA(K=" + std::to_string(params.users) + ",F=" + std::to_string(params.packets) +
         ",Z=" + std::to_string(params.stars) + ",S=" + std::to_string(params.blocks) + ")" +
         regularity_suffix(params.regularity) + "\n";
}

std::string params_line(const MapdaParams& params) {
  return "MAPDA(L=" + std::to_string(params.antennas) + ",K=" + std::to_string(params.users) +
         ",F=" + std::to_string(params.packets) + ",Z=" + std::to_string(params.stars) +
         ",S=" + std::to_string(params.blocks) + ")" + regularity_suffix(params.regularity) +
         "\n";
}

// Stage files share the output prefix; absent stages write nothing.
void write_trace_files(const LiftTrace& trace, const std::string& prefix) {
  write_array_file(prefix + ".q0", trace.q0);
  if (trace.p1) write_array_file(prefix + ".p1", *trace.p1);
  if (trace.u) write_array_file(prefix + ".u", *trace.u);
  if (trace.u0) write_array_file(prefix + ".u0", *trace.u0);
  if (trace.p2) write_array_file(prefix + ".p2", *trace.p2);
  write_array_file(prefix + ".p", trace.p);
}

// Rebuilds a trace from stage files. The replication count is recovered from
// the stage widths (u0 is u replicated that many times); without shifted
// stages the lift was plain replication, so the count equals the antennas.
LiftTrace read_trace_files(const std::string& prefix, std::int64_t antennas) {
  const auto maybe = [](const std::string& path) -> std::optional<CodedArray> {
    if (!std::filesystem::exists(path)) {
      return std::nullopt;
    }
    return read_array_file(path);
  };

  LiftTrace trace{LiftParams{},
                  read_array_file(prefix + ".q0"),
                  maybe(prefix + ".p1"),
                  maybe(prefix + ".u"),
                  maybe(prefix + ".u0"),
                  maybe(prefix + ".p2"),
                  read_array_file(prefix + ".p")};

  std::int64_t copies = antennas;
  if (trace.u && trace.u0) {
    if (trace.u->cols() < 1 || trace.u0->cols() % trace.u->cols() != 0) {
      throw std::runtime_error("trace: stage widths of " + prefix + ".u and " + prefix +
                               ".u0 are inconsistent");
    }
    copies = trace.u0->cols() / trace.u->cols();
  }
  if (copies < 1 || trace.q0.cols() % copies != 0) {
    throw std::runtime_error("trace: " + prefix + ".q0 is not " + std::to_string(copies) +
                             " horizontal copies");
  }

  const std::int64_t base_cols = trace.q0.cols() / copies;
  CodedArray base(trace.q0.rows(), base_cols);
  for (std::int64_t f = 0; f < trace.q0.rows(); ++f) {
    for (std::int64_t k = 0; k < base_cols; ++k) {
      base.set(f, k, trace.q0.at(f, k));
    }
  }
  trace.params = LiftParams::from(copies, antennas, validate_pda(base));
  return trace;
}

std::string render_star_audit(const StarAudit& audit) {
  std::string out = "audit users=" + std::to_string(audit.params.users) +
                    " antennas=" + std::to_string(audit.params.antennas) +
                    " packets=" + std::to_string(audit.params.packets) +
                    " stars=" + std::to_string(audit.params.stars) +
                    " blocks=" + std::to_string(audit.params.blocks) +
                    regularity_suffix(audit.params.regularity) + "\n";
  out += "integer-entries " + std::to_string(audit.integer_entries) + " stars-used " +
         std::to_string(audit.stars_used) + " stars-available " +
         std::to_string(audit.stars_available) + "\n";
  out += "min-blocks " + to_string(audit.min_blocks) + " sum-dof " +
         to_string(audit.achieved_dof) + " dof-bound " + to_string(audit.dof_bound) +
         " equality=" + (audit.meets_bound_with_equality ? "yes" : "no") + "\n";
  return out;
}

std::string lift_flag(bool ok, bool vacuous) {
  std::string out = ok ? "yes" : "NO";
  if (vacuous) {
    out += "-vacuous";
  }
  return out;
}

std::string render_lift_audit(const LiftAudit& audit) {
  std::string out = "lift-audit distinct-columns=";
  out += lift_flag(audit.distinct_columns, false);
  out += " p1-star-budget=" + lift_flag(audit.p1_star_budget, audit.p1_vacuous);
  out += " p2-star-match=" + lift_flag(audit.p2_star_match, audit.p2_vacuous);
  out += std::string(" passed=") + (audit.passed() ? "yes" : "NO") + "\n";
  for (const std::string& failure : audit.failures) {
    out += "lift-audit-failure " + failure + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Placement delivery array toolkit for multi-antenna coded caching"};
  app.require_subcommand(1);
  std::function<int()> run;

  // construct
  auto* construct = app.add_subcommand("construct", "Generate an array");
  construct->require_subcommand(1);

  std::int64_t users = 0;
  std::int64_t t = 0;
  std::int64_t order = 0;
  std::int64_t antennas = 0;
  std::int64_t copies = 0;
  std::int64_t max_cells = std::int64_t{1} << 26;
  std::string input;
  std::string output;
  std::string trace_prefix;

  auto* mn = construct->add_subcommand("mn-pda", "Subset-indexed single-antenna array");
  mn->add_option("--users", users, "Number of users K")->required();
  mn->add_option("--t", t, "Cached fraction numerator t")->required();
  mn->add_option("--max-cells", max_cells, "Refuse larger outputs");
  mn->add_option("-o,--output", output, "Write to a file instead of standard output");
  mn->callback([&] {
    run = [&] {
      emit(to_text(mn_pda(users, t, max_cells)), output);
      return 0;
    };
  });

  auto* latin = construct->add_subcommand("latin", "Cyclic Latin square");
  latin->add_option("--order", order, "Square order")->required();
  latin->add_option("-o,--output", output, "Write to a file instead of standard output");
  latin->callback([&] {
    run = [&] {
      emit(to_text(latin_square(order)), output);
      return 0;
    };
  });

  auto* lm = construct->add_subcommand("latin-mapda", "Latin-square multi-antenna array");
  lm->add_option("--users", users, "Number of users K")->required();
  lm->add_option("--antennas", antennas, "Transmit antennas L")->required();
  lm->add_option("-o,--output", output, "Write to a file instead of standard output");
  lm->callback([&] {
    run = [&] {
      emit(to_text(latin_mapda(users, antennas)), output);
      return 0;
    };
  });

  auto* lift = construct->add_subcommand("lift", "Lift a regular single-antenna array");
  lift->add_option("--input", input, "Base array file")->required();
  lift->add_option("--copies", copies, "Horizontal replication count m")->required();
  lift->add_option("--antennas", antennas, "Transmit antennas L")->required();
  lift->add_option("--trace", trace_prefix, "Write stage files under this prefix");
  lift->add_option("-o,--output", output, "Write to a file instead of standard output");
  lift->callback([&] {
    run = [&] {
      const LiftTrace trace = lift_regular_pda(read_array_file(input), copies, antennas);
      if (!trace_prefix.empty()) {
        write_trace_files(trace, trace_prefix);
      }
      emit(to_text(trace.p), output);
      return 0;
    };
  });

  auto* mnm = construct->add_subcommand("mn-mapda", "Lifted subset-indexed array");
  mnm->add_option("--users", users, "Base users K1")->required();
  mnm->add_option("--t", t, "Base cached fraction numerator t1")->required();
  mnm->add_option("--copies", copies, "Horizontal replication count m")->required();
  mnm->add_option("--antennas", antennas, "Transmit antennas L")->required();
  mnm->add_option("--trace", trace_prefix, "Write stage files under this prefix");
  mnm->add_option("-o,--output", output, "Write to a file instead of standard output");
  mnm->callback([&] {
    run = [&] {
      const LiftTrace trace = mn_mapda(users, t, copies, antennas);
      if (!trace_prefix.empty()) {
        write_trace_files(trace, trace_prefix);
      }
      emit(to_text(trace.p), output);
      return 0;
    };
  });

  // validate
  std::string file;
  auto* validate = app.add_subcommand("validate", "Check an array file");
  validate->add_option("file", file, "Array file")->required();
  auto* validate_antennas = validate->add_option(
      "--antennas", antennas, "Check as a multi-antenna array with this many antennas");
  validate->callback([&] {
    run = [&] {
      const CodedArray a = read_array_file(file);
      if (validate_antennas->count() > 0) {
        std::cout << params_line(validate_mapda(a, antennas));
      } else {
        std::cout << params_line(validate_pda(a));
      }
      return 0;
    };
  });

  // plan
  std::vector<std::int64_t> demands;
  std::int64_t files = 0;
  auto* plan = app.add_subcommand("plan", "Print the delivery plan for given demands");
  plan->add_option("file", file, "Array file")->required();
  plan->add_option("--demands", demands, "Demanded file per user, comma separated")
      ->required()
      ->delimiter(',');
  plan->add_option("--files", files, "Library size N")->required();
  plan->callback([&] {
    run = [&] {
      std::cout << render_plan(plan_delivery(read_array_file(file), demands, files));
      return 0;
    };
  });

  // simulate
  std::string channel = "cauchy";
  std::string mode = "exact";
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the delivery over a channel");
  simulate_cmd->add_option("file", file, "Array file")->required();
  simulate_cmd->add_option("--antennas", antennas, "Transmit antennas L")->required();
  simulate_cmd->add_option("--demands", demands, "Demanded file per user, comma separated")
      ->required()
      ->delimiter(',');
  simulate_cmd->add_option("--files", files, "Library size N")->required();
  simulate_cmd->add_option("--channel", channel, "cauchy, vandermonde, or gaussian")
      ->check(CLI::IsMember({"cauchy", "vandermonde", "gaussian"}));
  simulate_cmd->add_option("--seed", seed, "Channel seed");
  simulate_cmd->add_option("--mode", mode, "exact (rational) or float")
      ->check(CLI::IsMember({"exact", "float"}));
  simulate_cmd->add_option("--tolerance", tolerance, "Decode tolerance in float mode");
  simulate_cmd->callback([&] {
    run = [&] {
      const CodedArray a = read_array_file(file);
      const ChannelKind kind = channel_from_name(channel);
      if (mode == "exact") {
        std::cout << render_report(
            simulate<Rational>(a, antennas, demands, files, kind, seed, tolerance));
      } else {
        std::cout << render_report(simulate<std::complex<double>>(a, antennas, demands, files,
                                                                  kind, seed, tolerance));
      }
      return 0;
    };
  });

  // audit
  auto* audit = app.add_subcommand("audit", "Star bookkeeping and bound audit");
  audit->add_option("file", file, "Array file")->required();
  audit->add_option("--antennas", antennas, "Transmit antennas L")->required();
  audit->add_option("--trace", trace_prefix, "Also audit the lift stages under this prefix");
  audit->callback([&] {
    run = [&] {
      const CodedArray a = read_array_file(file);
      std::cout << render_star_audit(star_audit(a, antennas));
      if (trace_prefix.empty()) {
        return 0;
      }
      const LiftTrace trace = read_trace_files(trace_prefix, antennas);
      if (trace.p != a) {
        throw std::runtime_error("trace: " + trace_prefix + ".p differs from " + file);
      }
      const LiftAudit lift_audit = audit_lift(trace);
      std::cout << render_lift_audit(lift_audit);
      return lift_audit.passed() ? 0 : 1;
    };
  });

  // compare
  std::int64_t m = 0;
  bool sweep = false;
  auto* compare = app.add_subcommand("compare", "Subpacketization of the reference schemes");
  compare->add_option("--users", users, "Number of users K")->required();
  compare->add_option("--antennas", antennas, "Transmit antennas L")->required();
  auto* t_opt = compare->add_option("--t", t, "Cached fraction numerator t");
  auto* m_opt = compare->add_option("--m", m, "Replication count for the lift row");
  auto* sweep_opt = compare->add_flag("--sweep-t", sweep, "CSV over every t in 1..K-1");
  t_opt->excludes(sweep_opt);
  compare->callback([&] {
    run = [&] {
      const std::optional<std::int64_t> lift_copies =
          m_opt->count() > 0 ? std::optional<std::int64_t>(m) : std::nullopt;
      if (sweep) {
        std::cout << sweep_csv(users, antennas, lift_copies);
        return 0;
      }
      if (t_opt->count() == 0) {
        throw std::invalid_argument("compare: pass either --t or --sweep-t");
      }
      std::cout << render_comparison(compare_subpacketization(users, antennas, t, lift_copies));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
