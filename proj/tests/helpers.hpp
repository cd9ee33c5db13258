#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>

#include "qdpi/linalg.hpp"
#include "qdpi/state.hpp"

namespace qdpi::test {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index i = 0;
  for (const double v : values) m(i, i) = v, ++i;
  return m;
}

inline ComplexVector ket(std::initializer_list<Complex> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const Complex c : values) v(i++) = c;
  return v;
}

inline DensityMatrix mixed(std::size_t d) {
  return DensityMatrix(identity(d) / static_cast<double>(d));
}

inline DensityMatrix pure(std::size_t d, std::size_t i) {
  return DensityMatrix(matrix_unit(d, i, i));
}

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("QDPI_TEST_DATA")) return env;
  return std::filesystem::path(__FILE__).parent_path() / "data";
}

}  // namespace qdpi::test
