#include "qdpi/state.hpp"

#include <cmath>
#include <string>

#include "qdpi/errors.hpp"

namespace qdpi {
namespace {

constexpr double kStateTol = 1e-10;
constexpr double kSupportWeightTol = 1e-10;

void validate_density(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError("density matrix must be square and nonempty, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw ValidationError("density matrix has non-finite entries");
  const double dev = hermiticity_deviation(m);
  if (dev > tol * (1.0 + m.norm())) {
    throw NonHermitianError("density matrix is not Hermitian (deviation " +
                                std::to_string(dev) + ")",
                            dev);
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    throw ValidationError("density matrix trace is " + std::to_string(tr.real()) +
                          ", expected 1");
  }
  const double lmin = min_eigenvalue(0.5 * (m + m.adjoint()));
  if (lmin < -tol) {
    throw NegativityError("density matrix has negative eigenvalue " +
                              std::to_string(lmin),
                          lmin);
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) {
  validate_density(mat, kStateTol);
  mat_ = 0.5 * (mat + mat.adjoint());
}

DensityMatrix DensityMatrix::with_tolerance(ComplexMatrix mat, double tol) {
  validate_density(mat, tol);
  return DensityMatrix(0.5 * (mat + mat.adjoint()), Unchecked{});
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<ComplexVector> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size()) {
    throw ValidationError("ensemble needs one probability per state (got " +
                          std::to_string(probs_.size()) + " probabilities, " +
                          std::to_string(states_.size()) + " states)");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0) || !std::isfinite(probs_[i])) {
      throw ValidationError("ensemble probability " + std::to_string(i) +
                            " is negative or non-finite");
    }
    total += probs_[i];
    if (states_[i].size() == 0 || states_[i].size() != states_.front().size()) {
      throw DimensionError("ensemble state " + std::to_string(i) +
                           " has inconsistent dimension");
    }
    if (!states_[i].allFinite() || std::abs(states_[i].norm() - 1.0) > kStateTol) {
      throw ValidationError("ensemble state " + std::to_string(i) +
                            " is not a unit vector");
    }
  }
  if (std::abs(total - 1.0) > kStateTol) {
    throw ValidationError("ensemble probabilities sum to " + std::to_string(total));
  }
}

BlochVector::BlochVector(std::array<double, 3> components) : a(components) {
  if (!(norm() <= 1.0 + kStateTol)) {
    throw ValidationError("Bloch vector length exceeds 1");
  }
}

double BlochVector::norm() const {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

DensityMatrix ensemble_to_density(const Ensemble& e) {
  const auto d = static_cast<Eigen::Index>(e.dim());
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < e.size(); ++i) {
    rho += e.probs()[i] * projector(e.states()[i]);
  }
  return DensityMatrix(std::move(rho));
}

PurifiedState purify(const Ensemble& e) {
  const auto n = static_cast<Eigen::Index>(e.size());
  const auto d = static_cast<Eigen::Index>(e.dim());
  ComplexVector v = ComplexVector::Zero(n * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    v.segment(i * d, d) = std::sqrt(e.probs()[static_cast<std::size_t>(i)]) *
                          e.states()[static_cast<std::size_t>(i)];
  }
  return {std::move(v), e.size(), e.dim()};
}

DensityMatrix reference_state(const Ensemble& e) {
  // Reducing |ψᴿ⟩⟨ψᴿ| over the system gives ⟨ψⱼ|ψᵢ⟩ in entry (i, j).
  const auto n = static_cast<Eigen::Index>(e.size());
  ComplexMatrix rho(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      rho(i, j) = std::sqrt(e.probs()[ui] * e.probs()[uj]) *
                  e.states()[uj].dot(e.states()[ui]);
    }
  }
  return DensityMatrix(std::move(rho));
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues(i);
    if (lambda > kSupportCutoff) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

ExtendedReal relative_entropy(const DensityMatrix& r1, const DensityMatrix& r2) {
  if (r1.dim() != r2.dim()) {
    throw DimensionError("relative_entropy: dimensions " +
                         std::to_string(r1.dim()) + " and " +
                         std::to_string(r2.dim()) + " differ");
  }
  const HermitianEigen eig2 = hermitian_eig(r2.matrix());
  // Diagonal of ρ₁ in the eigenbasis of ρ₂.
  const ComplexMatrix rotated =
      eig2.eigenvectors.adjoint() * r1.matrix() * eig2.eigenvectors;
  double cross = 0.0;
  double outside = 0.0;
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) {
    const double weight = rotated(k, k).real();
    const double lambda = eig2.eigenvalues(k);
    if (lambda > kSupportCutoff) {
      cross += weight * std::log2(lambda);
    } else {
      outside += weight;
    }
  }
  if (outside > kSupportWeightTol) return ExtendedReal::infinity();
  return -von_neumann_entropy(r1) - cross;
}

DensityMatrix bloch_to_density(const BlochVector& a) {
  ComplexMatrix m = identity(2) + a.a[0] * pauli_x() + a.a[1] * pauli_y() +
                    a.a[2] * pauli_z();
  return DensityMatrix(0.5 * m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionError("density_to_bloch: expected a 2x2 density matrix, got " +
                         std::to_string(rho.dim()) + "x" +
                         std::to_string(rho.dim()));
  }
  const ComplexMatrix& m = rho.matrix();
  return BlochVector({(m * pauli_x()).trace().real(),
                      (m * pauli_y()).trace().real(),
                      (m * pauli_z()).trace().real()});
}

}  // namespace qdpi
