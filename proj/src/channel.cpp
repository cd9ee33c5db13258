#include "qdpi/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdpi/errors.hpp"
#include "qdpi/rng.hpp"

namespace qdpi {
namespace {

constexpr double kChannelOutputTol = 1e-9;
constexpr double kCpTol = 1e-8;
constexpr double kKrausEigenCutoff = 1e-10;
constexpr double kReconstructionTol = 1e-8;

std::string dims_str(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ValidationError("Kraus channel needs at least one operator");
  dim_out_ = static_cast<std::size_t>(ops_.front().rows());
  dim_in_ = static_cast<std::size_t>(ops_.front().cols());
  if (dim_in_ == 0 || dim_out_ == 0) {
    throw DimensionError("Kraus operator 0 is empty");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(ops_.front().cols(), ops_.front().cols());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const ComplexMatrix& a = ops_[i];
    if (static_cast<std::size_t>(a.rows()) != dim_out_ ||
        static_cast<std::size_t>(a.cols()) != dim_in_) {
      throw DimensionError("Kraus operator " + std::to_string(i) + " is " +
                           dims_str(static_cast<std::size_t>(a.rows()),
                                    static_cast<std::size_t>(a.cols())) +
                           ", expected " + dims_str(dim_out_, dim_in_));
    }
    if (!a.allFinite()) {
      throw ValidationError("Kraus operator " + std::to_string(i) +
                            " has non-finite entries");
    }
    sum += a.adjoint() * a;
  }
  const double dev = (sum - identity(dim_in_)).norm();
  if (!(dev <= kCompletenessTol)) {
    throw ValidationError("Kraus operators are not complete: ||sum A^dag A - I||_F = " +
                          std::to_string(dev));
  }
}

ComplexMatrix apply_operator(const KrausChannel& s, const ComplexMatrix& x) {
  if (static_cast<std::size_t>(x.rows()) != s.dim_in() ||
      static_cast<std::size_t>(x.cols()) != s.dim_in()) {
    throw DimensionError("apply: operator is " +
                         dims_str(static_cast<std::size_t>(x.rows()),
                                  static_cast<std::size_t>(x.cols())) +
                         ", channel input dimension is " +
                         std::to_string(s.dim_in()));
  }
  const auto d = static_cast<Eigen::Index>(s.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& a : s.ops()) out.noalias() += a * x * a.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& s, const DensityMatrix& rho) {
  return DensityMatrix::with_tolerance(apply_operator(s, rho.matrix()),
                                       kChannelOutputTol);
}

KrausChannel compose(const KrausChannel& s2, const KrausChannel& s1) {
  if (s1.dim_out() != s2.dim_in()) {
    throw DimensionError("compose: inner channel outputs dimension " +
                         std::to_string(s1.dim_out()) +
                         " but outer channel expects " + std::to_string(s2.dim_in()));
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(s1.ops().size() * s2.ops().size());
  for (const auto& b : s2.ops()) {
    for (const auto& a : s1.ops()) ops.push_back(b * a);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel mix(double c, const KrausChannel& s1, const KrausChannel& s2) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError("mix: weight " + std::to_string(c) + " outside [0, 1]");
  }
  if (s1.dim_in() != s2.dim_in() || s1.dim_out() != s2.dim_out()) {
    throw DimensionError("mix: channels have different dimensions (" +
                         dims_str(s1.dim_out(), s1.dim_in()) + " vs " +
                         dims_str(s2.dim_out(), s2.dim_in()) + ")");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(s1.ops().size() + s2.ops().size());
  if (c > 0.0) {
    for (const auto& a : s1.ops()) ops.push_back(std::sqrt(c) * a);
  }
  if (c < 1.0) {
    for (const auto& b : s2.ops()) ops.push_back(std::sqrt(1.0 - c) * b);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel extend_with_identity(const KrausChannel& s, std::size_t ref_dim) {
  if (ref_dim == 0) throw DimensionError("extend_with_identity: reference dimension 0");
  const ComplexMatrix id = identity(ref_dim);
  std::vector<ComplexMatrix> ops;
  ops.reserve(s.ops().size());
  for (const auto& a : s.ops()) ops.push_back(kron(id, a));
  return KrausChannel(std::move(ops));
}

KrausChannel identity_channel(std::size_t d) {
  if (d == 0) throw DimensionError("identity channel needs d >= 1");
  return KrausChannel({identity(d)});
}

KrausChannel two_pauli(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError("two_pauli: x = " + std::to_string(x) + " outside [0, 1]");
  }
  const double w = std::sqrt((1.0 - x) / 2.0);
  const Complex minus_i(0.0, -1.0);
  return KrausChannel({std::sqrt(x) * identity(2), w * pauli_x(),
                       minus_i * w * pauli_y()});
}

KrausChannel erasure_channel(std::size_t d) {
  if (d == 0) throw DimensionError("erasure channel needs d >= 1");
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (std::size_t mu = 0; mu < d; ++mu) ops.push_back(matrix_unit(d, 0, mu));
  return KrausChannel(std::move(ops));
}

KrausChannel random_channel(std::size_t d_in, std::size_t d_out,
                            std::size_t kraus_count, std::uint64_t seed) {
  if (d_in == 0 || d_out == 0 || kraus_count == 0 || kraus_count * d_out < d_in) {
    throw DimensionError("random_channel: infeasible dimensions (dIn=" +
                         std::to_string(d_in) + ", dOut=" + std::to_string(d_out) +
                         ", krausCount=" + std::to_string(kraus_count) + ")");
  }
  Rng rng(seed);
  const ComplexMatrix v = haar_isometry(kraus_count * d_out, d_in, rng);
  const auto rows = static_cast<Eigen::Index>(d_out);
  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_count);
  for (std::size_t mu = 0; mu < kraus_count; ++mu) {
    ops.push_back(v.block(static_cast<Eigen::Index>(mu) * rows, 0, rows,
                          static_cast<Eigen::Index>(d_in)));
  }
  return KrausChannel(std::move(ops));
}

ChoiMatrix choi(const KrausChannel& s) {
  const std::size_t n = s.dim_in();
  ComplexVector omega = ComplexVector::Zero(static_cast<Eigen::Index>(n * n));
  for (std::size_t i = 0; i < n; ++i) omega(static_cast<Eigen::Index>(i * n + i)) = 1.0;
  const KrausChannel extended = extend_with_identity(s, n);
  return {apply_operator(extended, projector(omega)), n, s.dim_out()};
}

ComplexMatrix apply_choi(const ChoiMatrix& j, const ComplexMatrix& x) {
  const auto din = static_cast<Eigen::Index>(j.dimIn);
  const auto dout = static_cast<Eigen::Index>(j.dimOut);
  if (x.rows() != din || x.cols() != din) {
    throw DimensionError("apply_choi: operator does not match input dimension " +
                         std::to_string(j.dimIn));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index k = 0; k < din; ++k) {
      if (x(i, k) != Complex(0.0, 0.0)) {
        out += x(i, k) * j.mat.block(i * dout, k * dout, dout, dout);
      }
    }
  }
  return out;
}

CpCheck is_cp(const ChoiMatrix& j, double tol) {
  const double lmin = min_eigenvalue(j.mat);
  return {lmin >= -tol, lmin};
}

std::vector<ComplexMatrix> kraus_from_choi(const ChoiMatrix& j) {
  const HermitianEigen eig = hermitian_eig(j.mat);
  const auto din = static_cast<Eigen::Index>(j.dimIn);
  const auto dout = static_cast<Eigen::Index>(j.dimOut);
  std::vector<ComplexMatrix> ops;
  // Largest eigenvalues first.
  for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; --k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda <= kKrausEigenCutoff) break;
    ComplexMatrix a(dout, din);
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index o = 0; o < dout; ++o) {
        a(o, i) = std::sqrt(lambda) * eig.eigenvectors(i * dout + o, k);
      }
    }
    ops.push_back(std::move(a));
  }
  return ops;
}

ErasureDecomposition decompose_erasure(const KrausChannel& s, double c) {
  if (s.dim_in() != s.dim_out()) {
    throw DimensionError("decompose_erasure: channel must be square, got " +
                         dims_str(s.dim_out(), s.dim_in()));
  }
  if (!(c >= 0.0 && c < 1.0)) {
    throw ValidationError("decompose_erasure: c = " + std::to_string(c) +
                          " outside [0, 1)");
  }
  const std::size_t d = s.dim_in();
  const ChoiMatrix js = choi(s);
  // Choi matrix of the erasure channel is I ⊗ |0⟩⟨0|.
  const ComplexMatrix erasure_choi = kron(identity(d), matrix_unit(d, 0, 0));
  ChoiMatrix c2{(js.mat - c * erasure_choi) / (1.0 - c), d, d};

  double residual = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const ComplexMatrix e = matrix_unit(d, i, k);
      const ComplexMatrix erased = (i == k ? 1.0 : 0.0) * matrix_unit(d, 0, 0);
      const ComplexMatrix rebuilt = c * erased + (1.0 - c) * apply_choi(c2, e);
      residual = std::max(residual, (rebuilt - apply_operator(s, e)).norm());
    }
  }
  if (residual > kReconstructionTol) {
    throw InternalConsistencyError("decompose_erasure: reconstruction residual " +
                                   std::to_string(residual));
  }

  const CpCheck cp = is_cp(c2, kCpTol);
  ErasureDecomposition out{c, std::move(c2), cp.completelyPositive, cp.minEigenvalue,
                           {}, residual};
  if (out.cpVerdict) out.c2Kraus = kraus_from_choi(out.c2);
  return out;
}

}  // namespace qdpi
