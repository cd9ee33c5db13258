#pragma once

// Coherent information, entropy exchange and the spectral bounds used by the
// strengthened monotonicity results.

#include <cstddef>
#include <vector>

#include "qdpi/channel.hpp"
#include "qdpi/extended_real.hpp"
#include "qdpi/state.hpp"

namespace qdpi {

struct CoherentInfoResult {
  double mutualInfo;       // outputEntropy − entropyExchange, may be negative
  double outputEntropy;    // S(Ŝρ)
  double entropyExchange;  // S((1ᴿ⊗Ŝ)|ψᴿ⟩⟨ψᴿ|)
};

/// (1ᴿ ⊗ Ŝ)(|ψᴿ⟩⟨ψᴿ|) for the computational-basis purification of `e`.
DensityMatrix evolved_purification(const Ensemble& e, const KrausChannel& s);

CoherentInfoResult coherent_information(const Ensemble& e, const KrausChannel& s);

struct RelativeEntropyIdentity {
  /// S((1ᴿ⊗Ŝ)|ψᴿ⟩⟨ψᴿ| ‖ ρᴿ ⊗ Ŝρ)
  ExtendedReal lhs;
  /// −S((1ᴿ⊗Ŝ)|ψᴿ⟩⟨ψᴿ|) + S(ρᴿ) + S(Ŝρ), always finite
  double rhs;
  /// False when lhs came out infinite while rhs is finite.
  bool consistent() const { return lhs.is_finite(); }
};

RelativeEntropyIdentity relative_entropy_identity(const Ensemble& e,
                                                  const KrausChannel& s);

/// λ_min(Ŝρ).
double c_at_state(const KrausChannel& s, const DensityMatrix& rho);

/// One index of the Weyl bounds for C = A + B (spectra ascending):
///   max(a₁+b_k, b₁+a_k) ≤ c_k ≤ min(b_k+a_n, a_k+b_n).
struct WeylBound {
  std::size_t k;  // 1-based
  double lower;
  double upper;
  double value;   // c_k
  bool violated;  // outside [lower, upper] by more than 1e−9
};

/// Throws NonHermitianError or DimensionError.
std::vector<WeylBound> weyl_bounds(const ComplexMatrix& a, const ComplexMatrix& b);

/// Interval for σ_k·(1−c) implied by ρ′ = c|0⟩⟨0| + (1−c)σ, where ρ′
/// has ascending spectrum ρ′₁ ≤ … ≤ ρ′ₙ:
///   k = 1:  ρ′₁ − c ≤ σ₁(1−c) ≤ min(ρ′₁, ρ′ₙ − c)
///   k ≥ 2:  max(ρ′₁, ρ′_k − c) ≤ σ_k(1−c) ≤ ρ′_k
struct SpectrumInterval {
  std::size_t k;  // 1-based
  double lower;
  double upper;
};

/// Throws ValidationError unless 0 ≤ c < 1.
std::vector<SpectrumInterval> mixture_spectrum_bounds(const DensityMatrix& rho_prime,
                                                      double c);

}  // namespace qdpi
