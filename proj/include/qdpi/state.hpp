#pragma once

// Quantum states: density matrices, pure-state ensembles, purifications and
// the Bloch parametrization of a qubit, plus von Neumann and Umegaki
// relative entropies (in bits).

#include <array>
#include <cstddef>
#include <vector>

#include "qdpi/extended_real.hpp"
#include "qdpi/linalg.hpp"

namespace qdpi {

/// Hermitian, unit trace, positive semidefinite (all within 1e−10).
class DensityMatrix {
 public:
  /// Validates; throws ValidationError (or a subclass) on violation.
  explicit DensityMatrix(ComplexMatrix mat);

  /// Validates with a looser tolerance; used for channel outputs, which are
  /// density matrices only up to accumulated rounding.
  static DensityMatrix with_tolerance(ComplexMatrix mat, double tol);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix mat, Unchecked) : mat_(std::move(mat)) {}
  ComplexMatrix mat_;
};

/// {pᵢ, |ψᵢ⟩}: probabilities summing to one, unit vectors of a common
/// dimension. The vectors need not be orthogonal.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<ComplexVector> states);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<ComplexVector>& states() const { return states_; }
  std::size_t size() const { return probs_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(states_.front().size()); }

 private:
  std::vector<double> probs_;
  std::vector<ComplexVector> states_;
};

/// Unit vector on reference ⊗ system. The reference factor comes first.
struct PurifiedState {
  ComplexVector vector;
  std::size_t refDim;
  std::size_t sysDim;

  ComplexMatrix projector() const { return vector * vector.adjoint(); }
};

struct BlochVector {
  std::array<double, 3> a{};

  BlochVector() = default;
  /// Throws ValidationError when |a| > 1 + 1e−10.
  explicit BlochVector(std::array<double, 3> components);
  double norm() const;
};

DensityMatrix ensemble_to_density(const Ensemble& e);

/// Σᵢ √pᵢ |i⟩ᴿ ⊗ |ψᵢ⟩ with {|i⟩ᴿ} the computational basis of C^n.
PurifiedState purify(const Ensemble& e);

/// (ρᴿ)ᵢⱼ = √(pᵢpⱼ)·⟨ψⱼ|ψᵢ⟩, the reduction of purify(e) onto the reference.
DensityMatrix reference_state(const Ensemble& e);

/// −Σ λ log₂ λ over the given spectrum, ignoring λ ≤ kSupportCutoff.
double entropy_of_spectrum(const RealVector& eigenvalues);
double von_neumann_entropy(const DensityMatrix& rho);

/// tr ρ₁(log₂ρ₁ − log₂ρ₂); +∞ when ρ₁ has weight > 1e−10 outside supp(ρ₂).
ExtendedReal relative_entropy(const DensityMatrix& r1, const DensityMatrix& r2);

DensityMatrix bloch_to_density(const BlochVector& a);
/// aᵢ = tr(ρσᵢ). Throws DimensionError unless ρ is 2×2.
BlochVector density_to_bloch(const DensityMatrix& rho);

}  // namespace qdpi
