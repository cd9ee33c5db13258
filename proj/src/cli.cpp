#include "qdpi/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "qdpi/channel_constant.hpp"
#include "qdpi/channel_io.hpp"
#include "qdpi/expr.hpp"
#include "qdpi/fuzz.hpp"
#include "qdpi/inequalities.hpp"
#include "qdpi/measures.hpp"
#include "qdpi/report_io.hpp"

namespace qdpi::cli {
namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string format = "csv";
  std::string out;
  bool strict = false;
  int threads = 0;
};

struct BudgetOptions {
  std::size_t grid = OptimizationBudget{}.gridPoints;
  std::size_t candidates = OptimizationBudget{}.refineCandidates;
  std::size_t rounds = OptimizationBudget{}.refinementRounds;
  std::size_t starts = OptimizationBudget{}.starts;
  std::size_t iterations = OptimizationBudget{}.iterations;

  OptimizationBudget budget(std::uint64_t seed) const {
    OptimizationBudget b;
    b.gridPoints = grid;
    b.refineCandidates = candidates;
    b.refinementRounds = rounds;
    b.starts = starts;
    b.iterations = iterations;
    b.seed = seed;
    return b;
  }
};

void add_budget_options(CLI::App* cmd, BudgetOptions& b) {
  cmd->add_option("--grid", b.grid, "Fibonacci grid points (qubit input)");
  cmd->add_option("--candidates", b.candidates, "grid minima refined (qubit input)");
  cmd->add_option("--rounds", b.rounds, "golden-section rounds (qubit input)");
  cmd->add_option("--starts", b.starts, "random starts (input dimension > 2)");
  cmd->add_option("--iterations", b.iterations, "descent sweeps per start");
}

DensityMatrix resolve_state(const std::string& name) {
  if (name == "mixed2") return DensityMatrix(0.5 * identity(2));
  if (name == "pure0") return DensityMatrix(matrix_unit(2, 0, 0));
  if (name == "pure1") return DensityMatrix(matrix_unit(2, 1, 1));
  return load_state_file(name);
}

Ensemble resolve_ensemble(const std::string& name) {
  const double h = std::sqrt(0.5);
  if (name == "mm2") return Ensemble({0.5, 0.5}, {basis_vector(2, 0), basis_vector(2, 1)});
  if (name == "pm2") {
    ComplexVector plus(2), minus(2);
    plus << h, h;
    minus << h, -h;
    return Ensemble({0.5, 0.5}, {plus, minus});
  }
  if (name == "pure0") return Ensemble({1.0}, {basis_vector(2, 0)});
  return load_ensemble_file(name);
}

KrausChannel resolve_channel(const std::string& text) {
  return eval_channel(parse_channel(text));
}

/// Buffers primary output and writes it to --out or the given stream.
class Output {
 public:
  Output(const GlobalOptions& g, std::ostream& fallback) : g_(g), fallback_(fallback) {}
  std::ostream& stream() { return buf_; }
  void flush() {
    if (g_.out.empty()) {
      fallback_ << buf_.str();
      fallback_.flush();
      return;
    }
    std::ofstream f(g_.out, std::ios::binary);
    if (!f) throw IoError("cannot open " + g_.out + " for writing");
    f << buf_.str();
    if (!f) throw IoError("error writing " + g_.out);
  }

 private:
  const GlobalOptions& g_;
  std::ostream& fallback_;
  std::ostringstream buf_;
};

bool json_format(const GlobalOptions& g) { return g.format == "json"; }

void emit_report(const GlobalOptions& g, std::ostream& os, const InequalityReport& r) {
  if (json_format(g)) {
    os << report_to_json(r) << '\n';
  } else {
    os << report_csv_header() << '\n' << report_to_csv(r) << '\n';
  }
}

int finish_check(const GlobalOptions& g, Output& out, const InequalityReport& r,
                 InequalityKind kind) {
  emit_report(g, out.stream(), r);
  out.flush();
  if (g.strict && is_theorem_backed(kind) && r.verdict == Verdict::Violated) {
    return kExitViolation;
  }
  return kExitOk;
}

ordered_json vector_json(const ComplexVector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent information, relative entropy and data-processing checks", "qdpi"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "base seed (default 0)");
  app.add_option("--tol", g.tol, "tolerance override");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "write primary output to PATH");
  app.add_flag("--strict", g.strict, "exit 3 when a theorem-backed check is violated");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)");

  // Each handler fills `action`; it runs after parsing succeeds.
  std::function<int()> action;
  BudgetOptions budget_opts;

  // compute ------------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "single quantities");
  compute->require_subcommand(1);
  std::string state, state2, state3, state4, ensemble, channel, channel1, channel2;
  double weight = 0.5;

  auto* entropy = compute->add_subcommand("entropy", "von Neumann entropy in bits");
  entropy->add_option("--state", state, "mixed2|pure0|pure1|PATH")->required();
  entropy->callback([&] {
    action = [&] {
      const double s = von_neumann_entropy(resolve_state(state));
      Output o(g, out);
      if (json_format(g)) {
        o.stream() << ordered_json{{"entropy", s}}.dump() << '\n';
      } else {
        o.stream() << format_number(s) << '\n';
      }
      o.flush();
      return kExitOk;
    };
  });

  auto* relent = compute->add_subcommand("relent", "relative entropy S(state||state2)");
  relent->add_option("--state", state)->required();
  relent->add_option("--state2", state2)->required();
  relent->callback([&] {
    action = [&] {
      const ExtendedReal s = relative_entropy(resolve_state(state), resolve_state(state2));
      Output o(g, out);
      if (json_format(g)) {
        ordered_json j;
        j["relative_entropy"] = s.is_infinite() ? ordered_json("inf") : ordered_json(s.value());
        o.stream() << j.dump() << '\n';
      } else {
        o.stream() << format_number(s) << '\n';
      }
      o.flush();
      return kExitOk;
    };
  });

  auto* coherent = compute->add_subcommand("coherent", "coherent information I(rho; S)");
  coherent->add_option("--ensemble", ensemble, "mm2|pm2|pure0|PATH")->required();
  coherent->add_option("--channel", channel, "channel expression")->required();
  coherent->callback([&] {
    action = [&] {
      const CoherentInfoResult r =
          coherent_information(resolve_ensemble(ensemble), resolve_channel(channel));
      Output o(g, out);
      if (json_format(g)) {
        o.stream() << ordered_json{{"mutual_info", r.mutualInfo},
                                   {"output_entropy", r.outputEntropy},
                                   {"entropy_exchange", r.entropyExchange}}
                          .dump()
                   << '\n';
      } else {
        o.stream() << "mutual_info,output_entropy,entropy_exchange\n"
                   << format_number(r.mutualInfo) << ',' << format_number(r.outputEntropy)
                   << ',' << format_number(r.entropyExchange) << '\n';
      }
      o.flush();
      return kExitOk;
    };
  });

  auto* cconst = compute->add_subcommand("cconst", "channel constant c(S)");
  cconst->add_option("--channel", channel, "channel expression")->required();
  add_budget_options(cconst, budget_opts);
  cconst->callback([&] {
    action = [&] {
      const ChannelConstant c =
          c_of_channel(resolve_channel(channel), budget_opts.budget(g.seed));
      Output o(g, out);
      if (json_format(g)) {
        ordered_json j;
        j["c"] = c.value;
        j["method"] = c.method.to_string();
        j["witness"] = vector_json(c.argminState);
        o.stream() << j.dump() << '\n';
      } else {
        o.stream() << "c,method\n"
                   << format_number(c.value) << ",\"" << c.method.to_string() << "\"\n";
      }
      o.flush();
      return kExitOk;
    };
  });

  // check --------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "check one inequality instance");
  check->require_subcommand(1);

  auto tol_for = [&](InequalityKind kind) { return g.tol.value_or(default_tolerance(kind)); };

  auto* lindblad = check->add_subcommand("lindblad", "S(r1||r2) >= S(Sr1||Sr2)");
  lindblad->add_option("--channel", channel)->required();
  lindblad->add_option("--state", state)->required();
  lindblad->add_option("--state2", state2)->required();
  lindblad->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::Lindblad;
      Output o(g, out);
      return finish_check(g, o,
                          check_lindblad(resolve_channel(channel), resolve_state(state),
                                         resolve_state(state2), tol_for(kind)),
                          kind);
    };
  });

  auto* jointconv = check->add_subcommand(
      "jointconv", "pairs (state||state2) and (state3||state4), weight --c");
  jointconv->add_option("--c", weight)->required();
  jointconv->add_option("--state", state)->required();
  jointconv->add_option("--state2", state2)->required();
  jointconv->add_option("--state3", state3)->required();
  jointconv->add_option("--state4", state4)->required();
  jointconv->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::JointConvexity;
      Output o(g, out);
      return finish_check(
          g, o,
          check_joint_convexity(weight, resolve_state(state), resolve_state(state2),
                                resolve_state(state3), resolve_state(state4), tol_for(kind)),
          kind);
    };
  });

  auto* dpi = check->add_subcommand("dpi", "I(rho;S1) >= I(rho;S2 S1)");
  dpi->add_option("--ensemble", ensemble)->required();
  dpi->add_option("--channel1", channel1)->required();
  dpi->add_option("--channel2", channel2)->required();
  dpi->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::Dpi;
      Output o(g, out);
      return finish_check(g, o,
                          check_dpi(resolve_ensemble(ensemble), resolve_channel(channel1),
                                    resolve_channel(channel2), tol_for(kind)),
                          kind);
    };
  });

  auto* chanconv = check->add_subcommand("chanconv", "convexity of I in the channel");
  chanconv->add_option("--ensemble", ensemble)->required();
  chanconv->add_option("--c", weight)->required();
  chanconv->add_option("--channel1", channel1)->required();
  chanconv->add_option("--channel2", channel2)->required();
  chanconv->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::ChannelConvexity;
      Output o(g, out);
      return finish_check(
          g, o,
          check_channel_convexity(resolve_ensemble(ensemble), weight,
                                  resolve_channel(channel1), resolve_channel(channel2),
                                  tol_for(kind)),
          kind);
    };
  });

  auto* slindblad = check->add_subcommand("slindblad", "(1-c)S(r1||r2) >= S(Sr1||Sr2)");
  slindblad->add_option("--channel", channel)->required();
  slindblad->add_option("--state", state)->required();
  slindblad->add_option("--state2", state2)->required();
  add_budget_options(slindblad, budget_opts);
  slindblad->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::StrengthenedLindblad;
      Output o(g, out);
      return finish_check(
          g, o,
          check_strengthened_lindblad(resolve_channel(channel), resolve_state(state),
                                      resolve_state(state2), budget_opts.budget(g.seed),
                                      tol_for(kind)),
          kind);
    };
  });

  auto* sdpi = check->add_subcommand("sdpi", "(1-c(S2)) I(rho;S1) >= I(rho;S2 S1)");
  sdpi->add_option("--ensemble", ensemble)->required();
  sdpi->add_option("--channel1", channel1)->required();
  sdpi->add_option("--channel2", channel2)->required();
  add_budget_options(sdpi, budget_opts);
  sdpi->callback([&] {
    action = [&] {
      const auto kind = InequalityKind::StrengthenedDpi;
      Output o(g, out);
      return finish_check(
          g, o,
          check_strengthened_dpi(resolve_ensemble(ensemble), resolve_channel(channel1),
                                 resolve_channel(channel2), budget_opts.budget(g.seed),
                                 tol_for(kind)),
          kind);
    };
  });

  // fuzz ---------------------------------------------------------------------
  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded fuzzing campaign");
  std::string inequality;
  std::size_t trials = 100;
  std::vector<std::size_t> dims{2};
  std::string summary_out;
  bool serial = false;
  fuzz_cmd->add_option("--inequality", inequality,
                       "lindblad|jointconv|dpi|chanconv|slindblad|sdpi")
      ->required();
  fuzz_cmd->add_option("--trials", trials, "number of trials");
  fuzz_cmd->add_option("--dims", dims, "dimensions, cycled over trials (e.g. 2,3)")
      ->delimiter(',');
  fuzz_cmd->add_option("--summary-out", summary_out, "write the summary as JSON");
  fuzz_cmd->add_flag("--serial", serial, "use the serial reference driver");
  add_budget_options(fuzz_cmd, budget_opts);
  fuzz_cmd->callback([&] {
    action = [&] {
      FuzzSettings settings;
      settings.inequality = parse_inequality_kind(inequality);
      settings.trials = trials;
      settings.dims = dims;
      settings.seed = g.seed;
      settings.tol = g.tol;
      settings.budget = budget_opts.budget(g.seed);
      settings.execution = serial ? Execution::Serial : Execution::Parallel;
      const FuzzResult result = fuzz(settings);

      Output o(g, out);
      if (!json_format(g)) o.stream() << report_csv_header() << '\n';
      for (const auto& r : result.reports) {
        o.stream() << (json_format(g) ? report_to_json(r) : report_to_csv(r)) << '\n';
      }
      o.flush();
      err << summary_to_text(result.summary);
      if (!summary_out.empty()) {
        std::ofstream f(summary_out, std::ios::binary);
        if (!f) throw IoError("cannot open " + summary_out + " for writing");
        f << summary_to_json(result.summary) << '\n';
      }
      if (g.strict && is_theorem_backed(settings.inequality) &&
          result.summary.violations > 0) {
        return kExitViolation;
      }
      return kExitOk;
    };
  });

  // sweep-two-pauli ----------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep-two-pauli",
                                   "c(S) of the two-Pauli channel over a grid of x");
  double grid_start = 0.0, grid_end = 1.0;
  std::size_t steps = 11;
  sweep->add_option("--start", grid_start, "first x (default 0)");
  sweep->add_option("--end", grid_end, "last x (default 1)");
  sweep->add_option("--steps", steps, "grid size, at least 2 (default 11)");
  add_budget_options(sweep, budget_opts);
  sweep->callback([&] {
    action = [&] {
      if (!(0.0 <= grid_start && grid_start <= grid_end && grid_end <= 1.0) || steps < 2) {
        throw ValidationError("sweep-two-pauli: need 0 <= start <= end <= 1 and steps >= 2");
      }
      Output o(g, out);
      if (!json_format(g)) o.stream() << "x,c_numeric,c_eq27,abs_diff,agrees\n";
      const OptimizationBudget budget = budget_opts.budget(g.seed);
      for (std::size_t i = 0; i < steps; ++i) {
        const double x = i + 1 == steps
                             ? grid_end
                             : grid_start + (grid_end - grid_start) * static_cast<double>(i) /
                                                static_cast<double>(steps - 1);
        const double numeric = c_of_channel(two_pauli(x), budget).value;
        const double closed = two_pauli_c_closed_form(x);
        const double diff = std::abs(numeric - closed);
        const bool agrees = diff <= 1e-6;
        if (json_format(g)) {
          o.stream() << ordered_json{{"x", x},
                                     {"c_numeric", numeric},
                                     {"c_eq27", closed},
                                     {"abs_diff", diff},
                                     {"agrees", agrees}}
                            .dump()
                     << '\n';
        } else {
          o.stream() << format_number(x) << ',' << format_number(numeric) << ','
                     << format_number(closed) << ',' << format_number(diff) << ','
                     << (agrees ? "true" : "false") << '\n';
        }
      }
      o.flush();
      return kExitOk;
    };
  });

  // parse --------------------------------------------------------------------
  auto* parse = app.add_subcommand("parse", "syntax-check a channel expression");
  std::string expression;
  parse->add_option("expression", expression, "channel expression")->required();
  parse->callback([&] {
    action = [&] {
      const ChannelExpr e = parse_channel(expression);
      const ChannelType t = infer_type(e);
      Output o(g, out);
      const auto dim = [](const std::optional<std::size_t>& d) {
        return d ? std::to_string(*d) : std::string("?");
      };
      if (json_format(g)) {
        ordered_json j;
        j["canonical"] = to_string(e);
        j["dimIn"] = t.dimIn ? ordered_json(*t.dimIn) : ordered_json(nullptr);
        j["dimOut"] = t.dimOut ? ordered_json(*t.dimOut) : ordered_json(nullptr);
        o.stream() << j.dump() << '\n';
      } else {
        o.stream() << to_string(e) << '\n' << dim(t.dimIn) << "->" << dim(t.dimOut) << '\n';
      }
      o.flush();
      return kExitOk;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitValidation;
  }

#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

  if (!action) {
    err << app.help();
    return kExitValidation;
  }
  try {
    return action();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace qdpi::cli
