#include "qdpi/linalg.hpp"

#include <cmath>
#include <string>

#include "qdpi/errors.hpp"

namespace qdpi {
namespace {

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: cannot multiply " + shape(a) + " by " +
                         shape(b));
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims,
                            Subsystem traced) {
  const auto d1 = static_cast<Eigen::Index>(dims.first);
  const auto d2 = static_cast<Eigen::Index>(dims.second);
  if (d1 == 0 || d2 == 0 || m.rows() != m.cols() || m.rows() != d1 * d2) {
    throw DimensionError("partial_trace: matrix " + shape(m) +
                         " does not match dims (" + std::to_string(d1) + "," +
                         std::to_string(d2) + ")");
  }
  if (traced == Subsystem::First) {
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (Eigen::Index k = 0; k < d1; ++k) {
      out += m.block(k * d2, k * d2, d2, d2);
    }
    return out;
  }
  ComplexMatrix out(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d1; ++j) {
      out(i, j) = m.block(i * d2, j * d2, d2, d2).trace();
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("trace: matrix " + shape(a) + " is not square");
  }
  return a.trace();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double hermiticity_deviation(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("matrix " + shape(a) + " is not square");
  }
  return (a - a.adjoint()).norm();
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

void require_hermitian(const ComplexMatrix& a, const char* context) {
  const double dev = hermiticity_deviation(a);
  if (!(dev <= kHermitianTol * (1.0 + a.norm()))) {
    throw NonHermitianError(std::string(context) +
                                ": matrix is not Hermitian (deviation " +
                                std::to_string(dev) + ")",
                            dev);
  }
}

HermitianEigen hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eig");
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eigenvalues");
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a)(0);
}

ComplexMatrix log_on_support(const ComplexMatrix& a, double cutoff) {
  const HermitianEigen eig = hermitian_eig(a);
  const double floor = -kHermitianTol * (1.0 + a.norm());
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < floor) {
    throw NegativityError("log_on_support: negative eigenvalue " +
                              std::to_string(eig.eigenvalues(0)),
                          eig.eigenvalues(0));
  }
  RealVector logs(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < logs.size(); ++i) {
    const double lambda = eig.eigenvalues(i);
    logs(i) = lambda > cutoff ? std::log2(lambda) : 0.0;
  }
  return eig.eigenvectors * logs.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

ComplexMatrix identity(std::size_t d) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                 static_cast<Eigen::Index>(d));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

ComplexVector basis_vector(std::size_t d, std::size_t i) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace qdpi
