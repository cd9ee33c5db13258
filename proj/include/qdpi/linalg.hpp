#pragma once

// Dense complex matrix algebra and Hermitian spectral routines.
//
// Matrices are Eigen dynamic complex matrices. The free functions here add
// shape checking and the conventions the rest of the library relies on:
// ascending eigenvalues, base-2 logarithms, a fixed support cutoff.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qdpi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues at or below this are treated as outside the support.
inline constexpr double kSupportCutoff = 1e-12;
/// Relative tolerance for Hermiticity and PSD checks.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigen {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

/// Bipartite dimensions (first factor, second factor). The first factor is
/// the outer (slowest varying) index of a Kronecker product.
struct BipartiteDims {
  std::size_t first;
  std::size_t second;
};

enum class Subsystem { First, Second };

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out `traced` and returns the reduced matrix on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims,
                            Subsystem traced);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// ‖a − a†‖_F
double hermiticity_deviation(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);
/// Throws NonHermitianError unless ‖a − a†‖_F ≤ 1e−10·(1+‖a‖_F).
void require_hermitian(const ComplexMatrix& a, const char* context);

/// Eigendecomposition of (a + a†)/2. Throws NonHermitianError when `a` is
/// not Hermitian within tolerance. Deterministic for a fixed input.
HermitianEigen hermitian_eig(const ComplexMatrix& a);
/// Eigenvalues only, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);
double min_eigenvalue(const ComplexMatrix& a);

/// V·diag(log₂ λ for λ > cutoff, 0 otherwise)·V†.
/// Throws NegativityError on an eigenvalue below −1e−10·(1+‖a‖_F).
ComplexMatrix log_on_support(const ComplexMatrix& a,
                             double cutoff = kSupportCutoff);

ComplexMatrix identity(std::size_t d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// |i⟩⟨j| in dimension d.
ComplexMatrix matrix_unit(std::size_t d, std::size_t i, std::size_t j);
ComplexVector basis_vector(std::size_t d, std::size_t i);
/// |v⟩⟨v|
ComplexMatrix projector(const ComplexVector& v);

}  // namespace qdpi
