#pragma once

// Instance checks for the relative-entropy and coherent-information
// inequalities. Every report is oriented so that lhs is the side claimed to
// be larger: slack = lhs − rhs, satisfied ⇔ slack ≥ −tolerance.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qdpi/channel.hpp"
#include "qdpi/channel_constant.hpp"
#include "qdpi/extended_real.hpp"
#include "qdpi/state.hpp"

namespace qdpi {

inline constexpr double kTheoremTol = 1e-9;
inline constexpr double kOptimizerTol = 1e-8;

enum class Verdict { Satisfied, Violated, Indeterminate };

/// Enough to regenerate the instance: fuzz trials are rebuilt from
/// (inequality, seed, dim); direct checks leave seed unset.
struct InstanceDescriptor {
  std::size_t trial = 0;
  std::optional<std::uint64_t> seed;
  std::size_t dim = 0;
  std::size_t ensembleSize = 0;
  std::optional<double> mixWeight;
};

struct Auxiliary {
  std::optional<double> c;          // channel constant used
  std::optional<bool> cpVerdict;    // erasure decomposition CP?
  std::optional<int> signI1;        // sign of I(ρ; Ŝ₁), −1/0/+1
  std::optional<double> i1;         // I(ρ; Ŝ₁)
};

struct InequalityReport {
  std::string name;
  ExtendedReal lhs{0.0};
  ExtendedReal rhs{0.0};
  /// Set when both sides are finite.
  std::optional<double> slack;
  Verdict verdict = Verdict::Satisfied;
  double tolerance = 0.0;
  InstanceDescriptor instance;
  Auxiliary auxiliary;

  /// Indeterminate instances do not count as violations.
  bool satisfied() const { return verdict != Verdict::Violated; }
};

/// Applies the verdict rules: finite sides compare by slack; +∞ ≥ finite
/// holds; finite ≥ +∞ fails; +∞ against +∞ is indeterminate.
InequalityReport make_report(std::string name, ExtendedReal lhs, ExtendedReal rhs,
                             double tolerance);

/// S(ρ₁‖ρ₂) ≥ S(Ŝρ₁‖Ŝρ₂)
InequalityReport check_lindblad(const KrausChannel& s, const DensityMatrix& r1,
                                const DensityMatrix& r2, double tol = kTheoremTol);

/// c·S(ρ₁‖σ₁) + (1−c)·S(ρ₂‖σ₂) ≥ S(cρ₁+(1−c)ρ₂ ‖ cσ₁+(1−c)σ₂)
InequalityReport check_joint_convexity(double c, const DensityMatrix& r1,
                                       const DensityMatrix& s1, const DensityMatrix& r2,
                                       const DensityMatrix& s2, double tol = kTheoremTol);

/// I(ρ; Ŝ₁) ≥ I(ρ; Ŝ₂Ŝ₁)
InequalityReport check_dpi(const Ensemble& e, const KrausChannel& s1,
                           const KrausChannel& s2, double tol = kTheoremTol);

/// c·I(ρ; Ŝ₁) + (1−c)·I(ρ; Ŝ₂) ≥ I(ρ; cŜ₁ + (1−c)Ŝ₂)
InequalityReport check_channel_convexity(const Ensemble& e, double c,
                                         const KrausChannel& s1, const KrausChannel& s2,
                                         double tol = kTheoremTol);

/// (1 − c(Ŝ))·S(ρ₁‖ρ₂) ≥ S(Ŝρ₁‖Ŝρ₂)
InequalityReport check_strengthened_lindblad(const KrausChannel& s,
                                             const DensityMatrix& r1,
                                             const DensityMatrix& r2,
                                             const OptimizationBudget& budget = {},
                                             double tol = kOptimizerTol);

/// (1 − c(Ŝ₂))·I(ρ; Ŝ₁) ≥ I(ρ; Ŝ₂Ŝ₁)
InequalityReport check_strengthened_dpi(const Ensemble& e, const KrausChannel& s1,
                                        const KrausChannel& s2,
                                        const OptimizationBudget& budget = {},
                                        double tol = kOptimizerTol);

/// cpVerdict of the erasure decomposition of `s` at `c`; unset when the
/// decomposition does not apply (non-square channel or c ≥ 1).
std::optional<bool> erasure_cp_verdict(const KrausChannel& s, double c);

}  // namespace qdpi
