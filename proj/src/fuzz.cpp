#include "qdpi/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qdpi/errors.hpp"
#include "qdpi/rng.hpp"

namespace qdpi {
namespace {

KrausChannel draw_channel(std::size_t d, Rng& rng) {
  const std::size_t kraus_count = 1 + rng.uniform_index(d * d);
  return random_channel(d, d, kraus_count, rng.next_u64());
}

Ensemble draw_ensemble(std::size_t d, Rng& rng) {
  const std::size_t n = 2 + rng.uniform_index(2);
  return random_ensemble(n, d, rng);
}

std::string stratum_key(InequalityKind kind, const InequalityReport& r) {
  const std::string cp = !r.auxiliary.cpVerdict ? "cp=n/a"
                         : *r.auxiliary.cpVerdict ? "cp=true"
                                                  : "cp=false";
  if (kind == InequalityKind::StrengthenedDpi) {
    const int sign = r.auxiliary.signI1.value_or(0);
    const char* s = sign > 0 ? "I1>0" : sign < 0 ? "I1<0" : "I1=0";
    return std::string(s) + "," + cp;
  }
  return cp;
}

}  // namespace

InequalityKind parse_inequality_kind(const std::string& name) {
  static const std::map<std::string, InequalityKind> names{
      {"lindblad", InequalityKind::Lindblad},
      {"jointconv", InequalityKind::JointConvexity},
      {"joint_convexity", InequalityKind::JointConvexity},
      {"dpi", InequalityKind::Dpi},
      {"chanconv", InequalityKind::ChannelConvexity},
      {"channel_convexity", InequalityKind::ChannelConvexity},
      {"slindblad", InequalityKind::StrengthenedLindblad},
      {"strengthened_lindblad", InequalityKind::StrengthenedLindblad},
      {"sdpi", InequalityKind::StrengthenedDpi},
      {"strengthened_dpi", InequalityKind::StrengthenedDpi},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw ValidationError("unknown inequality \"" + name + "\"");
  return it->second;
}

std::string inequality_name(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::Lindblad: return "lindblad";
    case InequalityKind::JointConvexity: return "jointconv";
    case InequalityKind::Dpi: return "dpi";
    case InequalityKind::ChannelConvexity: return "chanconv";
    case InequalityKind::StrengthenedLindblad: return "slindblad";
    case InequalityKind::StrengthenedDpi: return "sdpi";
  }
  return "unknown";
}

bool is_theorem_backed(InequalityKind kind) {
  return kind != InequalityKind::StrengthenedLindblad &&
         kind != InequalityKind::StrengthenedDpi;
}

double default_tolerance(InequalityKind kind) {
  return is_theorem_backed(kind) ? kTheoremTol : kOptimizerTol;
}

InequalityReport run_trial(InequalityKind kind, std::uint64_t trial_seed, std::size_t dim,
                           double tol, const OptimizationBudget& budget) {
  if (dim == 0) throw DimensionError("fuzz: dimension must be positive");
  Rng rng(trial_seed);
  InequalityReport report = [&] {
    switch (kind) {
      case InequalityKind::Lindblad: {
        const KrausChannel s = draw_channel(dim, rng);
        const DensityMatrix r1 = random_density(dim, rng);
        const DensityMatrix r2 = random_density(dim, rng);
        return check_lindblad(s, r1, r2, tol);
      }
      case InequalityKind::JointConvexity: {
        const double c = rng.uniform();
        const DensityMatrix r1 = random_density(dim, rng);
        const DensityMatrix s1 = random_density(dim, rng);
        const DensityMatrix r2 = random_density(dim, rng);
        const DensityMatrix s2 = random_density(dim, rng);
        return check_joint_convexity(c, r1, s1, r2, s2, tol);
      }
      case InequalityKind::Dpi: {
        const Ensemble e = draw_ensemble(dim, rng);
        const KrausChannel s1 = draw_channel(dim, rng);
        const KrausChannel s2 = draw_channel(dim, rng);
        return check_dpi(e, s1, s2, tol);
      }
      case InequalityKind::ChannelConvexity: {
        const Ensemble e = draw_ensemble(dim, rng);
        const double c = rng.uniform();
        const KrausChannel s1 = draw_channel(dim, rng);
        const KrausChannel s2 = draw_channel(dim, rng);
        return check_channel_convexity(e, c, s1, s2, tol);
      }
      case InequalityKind::StrengthenedLindblad: {
        const KrausChannel s = draw_channel(dim, rng);
        const DensityMatrix r1 = random_density(dim, rng);
        const DensityMatrix r2 = random_density(dim, rng);
        return check_strengthened_lindblad(s, r1, r2, budget, tol);
      }
      case InequalityKind::StrengthenedDpi: {
        const Ensemble e = draw_ensemble(dim, rng);
        const KrausChannel s1 = draw_channel(dim, rng);
        const KrausChannel s2 = draw_channel(dim, rng);
        return check_strengthened_dpi(e, s1, s2, budget, tol);
      }
    }
    throw ValidationError("unknown inequality kind");
  }();
  report.instance.seed = trial_seed;
  report.instance.dim = dim;
  return report;
}

FuzzResult fuzz(const FuzzSettings& settings) {
  if (settings.trials == 0) throw ValidationError("fuzz: trials must be >= 1");
  if (settings.dims.empty()) throw ValidationError("fuzz: no dimensions given");
  const double tol = settings.tol.value_or(default_tolerance(settings.inequality));
  // Trials are the unit of parallelism; each inner optimizer runs serially.
  OptimizationBudget budget = settings.budget;
  budget.execution = Execution::Serial;

  std::vector<InequalityReport> reports(settings.trials);
  auto trial = [&](std::size_t i) {
    InequalityReport r = run_trial(settings.inequality, settings.seed + i,
                                   settings.dims[i % settings.dims.size()], tol, budget);
    r.instance.trial = i;
    return r;
  };
  if (settings.execution == Execution::Serial) {
    for (std::size_t i = 0; i < settings.trials; ++i) reports[i] = trial(i);
  } else {
    const auto count = static_cast<std::ptrdiff_t>(settings.trials);
    std::vector<std::string> errors(settings.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      try {
        reports[idx] = trial(idx);
      } catch (const std::exception& e) {
        errors[idx] = e.what();
      }
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (!errors[i].empty()) {
        throw Error("fuzz trial " + std::to_string(i) + ": " + errors[i]);
      }
    }
  }
  FuzzSummary summary = summarize(settings.inequality, reports);
  return {std::move(reports), std::move(summary)};
}

FuzzSummary summarize(InequalityKind kind, const std::vector<InequalityReport>& reports) {
  FuzzSummary s;
  s.inequality = inequality_name(kind);
  s.trials = reports.size();
  std::vector<double> slacks;
  std::map<std::string, Stratum> strata;
  const bool stratified = !is_theorem_backed(kind);
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated) {
      ++s.violations;
      if (r.instance.seed) s.violatingSeeds.push_back(*r.instance.seed);
    } else if (r.verdict == Verdict::Indeterminate) {
      ++s.indeterminate;
    }
    if (r.slack) slacks.push_back(*r.slack);
    if (stratified) {
      const std::string key = stratum_key(kind, r);
      Stratum& st = strata[key];
      st.key = key;
      ++st.trials;
      if (r.verdict == Verdict::Violated) ++st.violations;
    }
  }
  if (!slacks.empty()) {
    std::sort(slacks.begin(), slacks.end());
    s.worstSlack = slacks.front();
    for (const double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      // Nearest rank: ceil(q·n), 1-based, at least 1.
      const auto n = slacks.size();
      auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
      rank = std::clamp<std::size_t>(rank, 1, n);
      s.slackQuantiles.push_back(slacks[rank - 1]);
    }
  }
  for (auto& [key, st] : strata) s.strata.push_back(st);
  return s;
}

}  // namespace qdpi
