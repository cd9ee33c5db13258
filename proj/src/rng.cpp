#include "qdpi/rng.hpp"

#include <cmath>
#include <numbers>

#include "qdpi/errors.hpp"

namespace qdpi {

double Rng::uniform() {
  return static_cast<double>(bits_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw ValidationError("uniform_index: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

double Rng::normal() {
  if (cached_normal_) {
    const double z = *cached_normal_;
    cached_normal_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(angle);
  return r * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Row-major fill so the draw order does not depend on Eigen's storage.
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols || cols == 0) {
    throw DimensionError("haar_isometry: need rows >= cols >= 1, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const auto m = static_cast<Eigen::Index>(rows);
  const auto n = static_cast<Eigen::Index>(cols);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

ComplexMatrix haar_unitary(std::size_t d, Rng& rng) { return haar_isometry(d, d, rng); }

ComplexVector haar_vector(std::size_t d, Rng& rng) {
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

DensityMatrix random_density(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

Ensemble random_ensemble(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<double> probs = random_simplex(n, rng);
  std::vector<ComplexVector> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) states.push_back(haar_vector(d, rng));
  return Ensemble(std::move(probs), std::move(states));
}

}  // namespace qdpi
