#include "qdpi/measures.hpp"

#include <algorithm>
#include <string>

#include "qdpi/errors.hpp"

namespace qdpi {
namespace {

constexpr double kBoundTol = 1e-9;
constexpr double kEvolvedStateTol = 1e-9;

void require_input_dim(const Ensemble& e, const KrausChannel& s) {
  if (e.dim() != s.dim_in()) {
    throw DimensionError("ensemble dimension " + std::to_string(e.dim()) +
                         " does not match channel input dimension " +
                         std::to_string(s.dim_in()));
  }
}

}  // namespace

DensityMatrix evolved_purification(const Ensemble& e, const KrausChannel& s) {
  require_input_dim(e, s);
  const PurifiedState psi = purify(e);
  const KrausChannel extended = extend_with_identity(s, psi.refDim);
  return DensityMatrix::with_tolerance(apply_operator(extended, psi.projector()),
                                       kEvolvedStateTol);
}

CoherentInfoResult coherent_information(const Ensemble& e, const KrausChannel& s) {
  require_input_dim(e, s);
  const DensityMatrix out = apply(s, ensemble_to_density(e));
  const double output_entropy = von_neumann_entropy(out);
  const double exchange = von_neumann_entropy(evolved_purification(e, s));
  return {output_entropy - exchange, output_entropy, exchange};
}

RelativeEntropyIdentity relative_entropy_identity(const Ensemble& e,
                                                  const KrausChannel& s) {
  require_input_dim(e, s);
  const DensityMatrix joint = evolved_purification(e, s);
  const DensityMatrix ref = reference_state(e);
  const DensityMatrix out = apply(s, ensemble_to_density(e));
  const DensityMatrix product =
      DensityMatrix::with_tolerance(kron(ref.matrix(), out.matrix()), kEvolvedStateTol);
  return {relative_entropy(joint, product),
          -von_neumann_entropy(joint) + von_neumann_entropy(ref) +
              von_neumann_entropy(out)};
}

double c_at_state(const KrausChannel& s, const DensityMatrix& rho) {
  return min_eigenvalue(apply(s, rho).matrix());
}

std::vector<WeylBound> weyl_bounds(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("weyl_bounds: operands have different shapes");
  }
  const RealVector sa = hermitian_eigenvalues(a);
  const RealVector sb = hermitian_eigenvalues(b);
  const RealVector sc = hermitian_eigenvalues(a + b);
  const Eigen::Index n = sa.size();
  std::vector<WeylBound> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lower = std::max(sa(0) + sb(k), sb(0) + sa(k));
    const double upper = std::min(sb(k) + sa(n - 1), sa(k) + sb(n - 1));
    const double value = sc(k);
    out.push_back({static_cast<std::size_t>(k + 1), lower, upper, value,
                   value < lower - kBoundTol || value > upper + kBoundTol});
  }
  return out;
}

std::vector<SpectrumInterval> mixture_spectrum_bounds(const DensityMatrix& rho_prime,
                                                      double c) {
  if (!(c >= 0.0 && c < 1.0)) {
    throw ValidationError("mixture_spectrum_bounds: c = " + std::to_string(c) +
                          " outside [0, 1)");
  }
  const RealVector r = hermitian_eigenvalues(rho_prime.matrix());
  const Eigen::Index n = r.size();
  std::vector<SpectrumInterval> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back({1, r(0) - c, std::min(r(0), r(n - 1) - c)});
  for (Eigen::Index k = 1; k < n; ++k) {
    out.push_back({static_cast<std::size_t>(k + 1), std::max(r(0), r(k) - c), r(k)});
  }
  return out;
}

}  // namespace qdpi
