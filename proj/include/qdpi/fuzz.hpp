#pragma once

// Seeded fuzzing of the inequality checks.
//
// Trial i draws its instance from Rng(seed + i) at dimension
// dims[i % dims.size()], so any trial can be replayed alone with
// {seed + i, trials = 1, dims = {d}}. Trials are independent; the parallel
// driver writes reports by index and must match the serial driver exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdpi/channel_constant.hpp"
#include "qdpi/execution.hpp"
#include "qdpi/inequalities.hpp"

namespace qdpi {

enum class InequalityKind {
  Lindblad,
  JointConvexity,
  Dpi,
  ChannelConvexity,
  StrengthenedLindblad,
  StrengthenedDpi,
};

/// Accepts the short CLI names (lindblad, jointconv, dpi, chanconv,
/// slindblad, sdpi) and long aliases (joint_convexity, channel_convexity,
/// strengthened_lindblad, strengthened_dpi). Throws ValidationError.
InequalityKind parse_inequality_kind(const std::string& name);
std::string inequality_name(InequalityKind kind);
/// True for the families with a known proof (not the strengthened ones).
bool is_theorem_backed(InequalityKind kind);
double default_tolerance(InequalityKind kind);

struct FuzzSettings {
  InequalityKind inequality = InequalityKind::Lindblad;
  std::size_t trials = 100;
  std::vector<std::size_t> dims{2};
  std::uint64_t seed = 0;
  std::optional<double> tol;  // default_tolerance(inequality) when unset
  OptimizationBudget budget;
  Execution execution = Execution::Parallel;
};

struct Stratum {
  std::string key;
  std::size_t trials = 0;
  std::size_t violations = 0;
};

struct FuzzSummary {
  std::string inequality;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t indeterminate = 0;
  /// Minimum finite slack; unset when no trial had one.
  std::optional<double> worstSlack;
  /// Nearest-rank quantiles (0, .25, .5, .75, 1) of the finite slacks.
  std::vector<double> slackQuantiles;
  std::vector<std::uint64_t> violatingSeeds;
  /// Strengthened checks only: by cpVerdict, and for sdpi also by sign of I(ρ; Ŝ₁).
  std::vector<Stratum> strata;
};

struct FuzzResult {
  std::vector<InequalityReport> reports;  // ordered by trial index
  FuzzSummary summary;
};

/// One trial, reproducible from (inequality, trialSeed, dim).
InequalityReport run_trial(InequalityKind kind, std::uint64_t trial_seed, std::size_t dim,
                           double tol, const OptimizationBudget& budget);

FuzzResult fuzz(const FuzzSettings& settings);
FuzzSummary summarize(InequalityKind kind, const std::vector<InequalityReport>& reports);

}  // namespace qdpi
