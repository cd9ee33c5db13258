#pragma once

// Quantum channels in Kraus form, ρ ↦ Σμ Aμ ρ Aμ† with Σμ Aμ†Aμ = 1.
//
// Some texts write the channel as Σ Aμ†ρAμ with Σ AμAμ† = 1; that is the
// same set of maps under Aμ ↔ Aμ†. The two-Pauli operators are Hermitian up
// to a global phase, so both readings give the identical channel.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdpi/linalg.hpp"
#include "qdpi/state.hpp"

namespace qdpi {

/// Completeness tolerance ‖Σ A†A − I‖_F.
inline constexpr double kCompletenessTol = 1e-9;

class KrausChannel {
 public:
  /// Each operator is dimOut × dimIn. Throws DimensionError naming the
  /// offending operator, or ValidationError when completeness fails.
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

/// Σ AμXAμ† for an arbitrary operator X (not necessarily a state).
ComplexMatrix apply_operator(const KrausChannel& s, const ComplexMatrix& x);
DensityMatrix apply(const KrausChannel& s, const DensityMatrix& rho);

/// s2 ∘ s1, Kraus set {Bν·Aμ}.
KrausChannel compose(const KrausChannel& s2, const KrausChannel& s1);
/// c·s1 + (1−c)·s2, Kraus set {√c·Aμ} ∪ {√(1−c)·Bν}. Zero-weight halves are
/// dropped.
KrausChannel mix(double c, const KrausChannel& s1, const KrausChannel& s2);
/// 1_refDim ⊗ s, reference factor first.
KrausChannel extend_with_identity(const KrausChannel& s, std::size_t ref_dim);

KrausChannel identity_channel(std::size_t d);
/// A₁ = √x·1, A₂ = √((1−x)/2)·σx, A₃ = −i√((1−x)/2)·σy.
KrausChannel two_pauli(double x);
/// Constant map to |0⟩⟨0|, Kraus set {|0⟩⟨μ|}.
KrausChannel erasure_channel(std::size_t d);
/// Kraus blocks sliced from a Haar isometry of shape (krausCount·dOut)×dIn.
KrausChannel random_channel(std::size_t d_in, std::size_t d_out,
                            std::size_t kraus_count, std::uint64_t seed);

/// Unnormalized Choi matrix J = Σᵢⱼ |i⟩⟨j| ⊗ S(|i⟩⟨j|), input factor first.
/// Its partial trace over the output is I_dIn for a trace-preserving map.
struct ChoiMatrix {
  ComplexMatrix mat;
  std::size_t dimIn;
  std::size_t dimOut;
};

ChoiMatrix choi(const KrausChannel& s);
/// The linear map encoded by a Choi matrix, applied to X.
ComplexMatrix apply_choi(const ChoiMatrix& j, const ComplexMatrix& x);

struct CpCheck {
  bool completelyPositive;
  double minEigenvalue;
};
CpCheck is_cp(const ChoiMatrix& j, double tol);

/// Kraus operators √λ·reshape(v) from eigenpairs of J with λ > 1e−10.
std::vector<ComplexMatrix> kraus_from_choi(const ChoiMatrix& j);

/// S = c·Ĉ₁ + (1−c)·C₂ with Ĉ₁ the erasure channel. C₂ is only a linear
/// map in general; cpVerdict records whether it is completely positive.
struct ErasureDecomposition {
  double c;
  ChoiMatrix c2;
  bool cpVerdict;
  double minChoiEigenvalue;
  /// Recovered from c2 when cpVerdict is true, else empty.
  std::vector<ComplexMatrix> c2Kraus;
  /// max over basis inputs of ‖c·Ĉ₁(E) + (1−c)·C₂(E) − S(E)‖_F.
  double reconstructionResidual;
};

/// Requires dimIn == dimOut and 0 ≤ c < 1. Throws InternalConsistencyError
/// when the reconstruction residual exceeds 1e−8.
ErasureDecomposition decompose_erasure(const KrausChannel& s, double c);

}  // namespace qdpi
