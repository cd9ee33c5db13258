#include "qdpi/inequalities.hpp"

#include "qdpi/errors.hpp"
#include "qdpi/measures.hpp"

namespace qdpi {
namespace {

constexpr double kSignThreshold = 1e-12;

void require_weight(double c, const char* where) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError(std::string(where) + ": weight " + std::to_string(c) +
                          " outside [0, 1]");
  }
}

DensityMatrix mixture(double c, const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("mixture: dimensions differ");
  return DensityMatrix::with_tolerance(c * a.matrix() + (1.0 - c) * b.matrix(), 1e-9);
}

InstanceDescriptor state_instance(std::size_t dim) {
  InstanceDescriptor d;
  d.dim = dim;
  return d;
}

InstanceDescriptor ensemble_instance(const Ensemble& e) {
  InstanceDescriptor d;
  d.dim = e.dim();
  d.ensembleSize = e.size();
  return d;
}

int sign_of(double v) {
  if (v > kSignThreshold) return 1;
  if (v < -kSignThreshold) return -1;
  return 0;
}

}  // namespace

InequalityReport make_report(std::string name, ExtendedReal lhs, ExtendedReal rhs,
                             double tolerance) {
  InequalityReport r{std::move(name), lhs, rhs, std::nullopt, Verdict::Satisfied,
                     tolerance, {}, {}};
  if (lhs.is_finite() && rhs.is_finite()) {
    r.slack = lhs.value() - rhs.value();
    r.verdict = *r.slack >= -tolerance ? Verdict::Satisfied : Verdict::Violated;
  } else if (lhs.is_infinite() && rhs.is_infinite()) {
    r.verdict = Verdict::Indeterminate;
  } else {
    r.verdict = lhs.is_infinite() ? Verdict::Satisfied : Verdict::Violated;
  }
  return r;
}

std::optional<bool> erasure_cp_verdict(const KrausChannel& s, double c) {
  if (s.dim_in() != s.dim_out() || !(c >= 0.0 && c < 1.0)) return std::nullopt;
  return decompose_erasure(s, c).cpVerdict;
}

InequalityReport check_lindblad(const KrausChannel& s, const DensityMatrix& r1,
                                const DensityMatrix& r2, double tol) {
  InequalityReport r = make_report(
      "lindblad", relative_entropy(r1, r2),
      relative_entropy(apply(s, r1), apply(s, r2)), tol);
  r.instance = state_instance(r1.dim());
  return r;
}

InequalityReport check_joint_convexity(double c, const DensityMatrix& r1,
                                       const DensityMatrix& s1, const DensityMatrix& r2,
                                       const DensityMatrix& s2, double tol) {
  require_weight(c, "check_joint_convexity");
  const ExtendedReal separate =
      relative_entropy(r1, s1).scaled(c) + relative_entropy(r2, s2).scaled(1.0 - c);
  const ExtendedReal joint = relative_entropy(mixture(c, r1, r2), mixture(c, s1, s2));
  InequalityReport r = make_report("jointconv", separate, joint, tol);
  r.instance = state_instance(r1.dim());
  r.instance.mixWeight = c;
  return r;
}

InequalityReport check_dpi(const Ensemble& e, const KrausChannel& s1,
                           const KrausChannel& s2, double tol) {
  const double first = coherent_information(e, s1).mutualInfo;
  const double both = coherent_information(e, compose(s2, s1)).mutualInfo;
  InequalityReport r = make_report("dpi", first, both, tol);
  r.instance = ensemble_instance(e);
  r.auxiliary.i1 = first;
  r.auxiliary.signI1 = sign_of(first);
  return r;
}

InequalityReport check_channel_convexity(const Ensemble& e, double c,
                                         const KrausChannel& s1, const KrausChannel& s2,
                                         double tol) {
  require_weight(c, "check_channel_convexity");
  const double separate = c * coherent_information(e, s1).mutualInfo +
                          (1.0 - c) * coherent_information(e, s2).mutualInfo;
  const double mixed = coherent_information(e, mix(c, s1, s2)).mutualInfo;
  InequalityReport r = make_report("chanconv", separate, mixed, tol);
  r.instance = ensemble_instance(e);
  r.instance.mixWeight = c;
  return r;
}

InequalityReport check_strengthened_lindblad(const KrausChannel& s,
                                             const DensityMatrix& r1,
                                             const DensityMatrix& r2,
                                             const OptimizationBudget& budget,
                                             double tol) {
  const double c = c_of_channel(s, budget).value;
  InequalityReport r = make_report(
      "slindblad", relative_entropy(r1, r2).scaled(1.0 - c),
      relative_entropy(apply(s, r1), apply(s, r2)), tol);
  r.instance = state_instance(r1.dim());
  r.auxiliary.c = c;
  r.auxiliary.cpVerdict = erasure_cp_verdict(s, c);
  return r;
}

InequalityReport check_strengthened_dpi(const Ensemble& e, const KrausChannel& s1,
                                        const KrausChannel& s2,
                                        const OptimizationBudget& budget, double tol) {
  const double c = c_of_channel(s2, budget).value;
  const double first = coherent_information(e, s1).mutualInfo;
  const double both = coherent_information(e, compose(s2, s1)).mutualInfo;
  InequalityReport r = make_report("sdpi", (1.0 - c) * first, both, tol);
  r.instance = ensemble_instance(e);
  r.auxiliary.c = c;
  r.auxiliary.cpVerdict = erasure_cp_verdict(s2, c);
  r.auxiliary.i1 = first;
  r.auxiliary.signI1 = sign_of(first);
  return r;
}

}  // namespace qdpi
