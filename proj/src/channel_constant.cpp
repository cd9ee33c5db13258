#include "qdpi/channel_constant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "qdpi/errors.hpp"
#include "qdpi/rng.hpp"

namespace qdpi {
namespace {

using Vec3 = std::array<double, 3>;

constexpr std::size_t kGoldenIterations = 40;
constexpr double kInitialDescentStep = 0.25;
constexpr double kMinDescentStep = 1e-15;

struct StartResult {
  double value;
  std::size_t index;  // start index, used for tie-breaking
  ComplexVector psi;
};

/// Ascending by value, then by start index.
bool better(const StartResult& a, const StartResult& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.index < b.index;
}

double min_eigenvalue_unchecked(const ComplexMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0).real();
  if (n == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double b = std::abs(0.5 * (m(0, 1) + std::conj(m(1, 0))));
    return 0.5 * (a + d) - std::hypot(0.5 * (a - d), b);
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// Minimizes f on [lo, hi]; returns (argmin, min).
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (std::size_t it = 0; it < kGoldenIterations; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

/// Golden-section descent in a tangent chart p(u, v) = normalize(n + u·t₁ + v·t₂)
/// that is re-centred after every accepted move.
StartResult refine_qubit(const KrausChannel& s, Vec3 n, std::size_t index,
                         double half_width, std::size_t rounds) {
  auto objective = [&](const Vec3& p) {
    return pure_state_objective(s, qubit_from_bloch(p[0], p[1], p[2]));
  };
  double best = objective(n);
  double h = half_width;
  for (std::size_t r = 0; r < rounds; ++r) {
    for (int axis = 0; axis < 2; ++axis) {
      const Vec3 helper = std::abs(n[0]) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      const Vec3 t1 = normalized(cross(n, helper));
      const Vec3 t2 = cross(n, t1);
      const Vec3& t = axis == 0 ? t1 : t2;
      auto point = [&](double u) {
        return normalized({n[0] + u * t[0], n[1] + u * t[1], n[2] + u * t[2]});
      };
      const auto [u, fu] = golden_section([&](double u) { return objective(point(u)); },
                                          -h, h);
      if (fu < best) {
        best = fu;
        n = point(u);
      }
    }
    h *= 0.5;
  }
  return {best, index, qubit_from_bloch(n[0], n[1], n[2])};
}

StartResult descend_from_random_start(const KrausChannel& s, std::size_t index,
                                      const OptimizationBudget& budget) {
  const std::size_t d = s.dim_in();
  Rng rng(budget.seed + index);
  ComplexVector psi = haar_vector(d, rng);
  double value = pure_state_objective(s, psi);
  double step = kInitialDescentStep;
  const Complex i_unit(0.0, 1.0);
  for (std::size_t it = 0; it < budget.iterations && step >= kMinDescentStep; ++it) {
    bool improved = false;
    for (std::size_t k = 0; k < 2 * d; ++k) {
      ComplexVector w = ComplexVector::Zero(static_cast<Eigen::Index>(d));
      w(static_cast<Eigen::Index>(k % d)) = k < d ? Complex(1.0) : i_unit;
      w -= psi * psi.dot(w);
      const double wn = w.norm();
      if (wn < 1e-12) continue;
      w /= wn;
      for (const double sign : {1.0, -1.0}) {
        ComplexVector cand = std::cos(step) * psi + sign * std::sin(step) * w;
        cand /= cand.norm();
        const double fv = pure_state_objective(s, cand);
        if (fv < value) {
          value = fv;
          psi = std::move(cand);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {value, index, std::move(psi)};
}

/// Runs `kernel(i)` for i in [0, n) and returns the results in index order.
template <typename Kernel>
std::vector<StartResult> run_starts(std::size_t n, Execution execution, Kernel&& kernel) {
  std::vector<StartResult> results(n);
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) results[i] = kernel(i);
  } else {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = kernel(static_cast<std::size_t>(i));
    }
  }
  return results;
}

StartResult best_of(const std::vector<StartResult>& results) {
  return *std::min_element(results.begin(), results.end(), better);
}

ChannelConstant qubit_constant(const KrausChannel& s, const OptimizationBudget& budget) {
  const std::size_t n = std::max<std::size_t>(budget.gridPoints, 1);
  std::vector<StartResult> grid = run_starts(n, budget.execution, [&](std::size_t i) {
    const SpherePoint p = fibonacci_sphere_point(i, n);
    ComplexVector psi = qubit_from_bloch(p.x, p.y, p.z);
    const double v = pure_state_objective(s, psi);
    return StartResult{v, i, std::move(psi)};
  });

  const std::size_t k = std::min(std::max<std::size_t>(budget.refineCandidates, 1), n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      return better(grid[a], grid[b]);
                    });

  const double spacing = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(n));
  std::vector<StartResult> refined =
      run_starts(k, budget.execution, [&](std::size_t r) {
        const std::size_t idx = order[r];
        const SpherePoint p = fibonacci_sphere_point(idx, n);
        StartResult res =
            refine_qubit(s, {p.x, p.y, p.z}, idx, 2.0 * spacing, budget.refinementRounds);
        // Never worse than the grid point it started from.
        if (grid[idx].value < res.value) return grid[idx];
        return res;
      });
  refined.push_back(grid[order.front()]);
  StartResult best = best_of(refined);

  MethodDescriptor method;
  method.algorithm = "fibonacci-grid+golden-section";
  method.gridPoints = n;
  method.refineCandidates = k;
  method.refinementRounds = budget.refinementRounds;
  return {best.value, std::move(best.psi), std::move(method)};
}

ChannelConstant multistart_constant(const KrausChannel& s,
                                    const OptimizationBudget& budget) {
  const std::size_t n = std::max<std::size_t>(budget.starts, 1);
  const std::vector<StartResult> results = run_starts(
      n, budget.execution,
      [&](std::size_t i) { return descend_from_random_start(s, i, budget); });
  StartResult best = best_of(results);

  MethodDescriptor method;
  method.algorithm = "multistart-coordinate-descent";
  method.starts = n;
  method.iterations = budget.iterations;
  method.seed = budget.seed;
  return {best.value, std::move(best.psi), std::move(method)};
}

}  // namespace

std::string MethodDescriptor::to_string() const {
  if (algorithm == "fibonacci-grid+golden-section") {
    return algorithm + "(grid=" + std::to_string(gridPoints) +
           ",candidates=" + std::to_string(refineCandidates) +
           ",rounds=" + std::to_string(refinementRounds) + ")";
  }
  if (algorithm == "multistart-coordinate-descent") {
    return algorithm + "(starts=" + std::to_string(starts) +
           ",iterations=" + std::to_string(iterations) +
           ",seed=" + std::to_string(seed) + ")";
  }
  return algorithm;
}

double pure_state_objective(const KrausChannel& s, const ComplexVector& psi) {
  const auto d = static_cast<Eigen::Index>(s.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& a : s.ops()) {
    const ComplexVector phi = a * psi;
    out.noalias() += phi * phi.adjoint();
  }
  return min_eigenvalue_unchecked(out);
}

ComplexVector qubit_from_bloch(double x, double y, double z) {
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  const double phi = std::atan2(y, x);
  ComplexVector psi(2);
  psi << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

SpherePoint fibonacci_sphere_point(std::size_t i, std::size_t n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * static_cast<double>(i);
  return {r * std::cos(phi), r * std::sin(phi), z};
}

ChannelConstant c_of_channel(const KrausChannel& s, const OptimizationBudget& budget) {
  ChannelConstant out;
  if (s.dim_in() == 1) {
    ComplexVector psi = ComplexVector::Ones(1);
    const double v = pure_state_objective(s, psi);
    out = {v, std::move(psi), MethodDescriptor{"trivial-input"}};
  } else if (s.dim_in() == 2) {
    out = qubit_constant(s, budget);
  } else {
    out = multistart_constant(s, budget);
  }
  // Rank-deficient outputs can round to a tiny negative eigenvalue.
  out.value = std::max(out.value, 0.0);
  return out;
}

double two_pauli_c_closed_form(double x) { return (1.0 - std::abs(2.0 * x - 1.0)) / 2.0; }

}  // namespace qdpi
