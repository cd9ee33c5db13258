#pragma once

// The channel constant c(Ŝ) = min over states ρ of λ_min(Ŝρ).
//
// Only pure inputs are searched. λ_min is concave on Hermitian matrices and
// ρ ↦ Ŝρ is linear, so λ_min(Ŝρ) is concave in ρ and its minimum over the
// convex set of density matrices is attained at an extreme point.
//
// Qubit inputs: Fibonacci grid on the Bloch sphere, then golden-section
// refinement of the best grid points in a local tangent chart.
// Larger inputs: seeded random pure starts, each refined by coordinate-wise
// geodesic descent with step halving.
//
// Starts are independent; the parallel driver evaluates them with OpenMP and
// reduces by value with ties going to the lowest start index, so its result
// equals the serial driver's bit for bit.

#include <cstddef>
#include <cstdint>
#include <string>

#include "qdpi/channel.hpp"
#include "qdpi/execution.hpp"

namespace qdpi {

struct OptimizationBudget {
  std::size_t gridPoints = 4096;       // qubit: Fibonacci grid size
  std::size_t refineCandidates = 8;    // qubit: grid minima refined
  std::size_t refinementRounds = 30;   // qubit: golden-section rounds
  std::size_t starts = 4096;           // d > 2: random starts
  std::size_t iterations = 200;        // d > 2: descent sweeps per start
  std::uint64_t seed = 0;              // d > 2: start i uses seed + i
  Execution execution = Execution::Parallel;
};

struct MethodDescriptor {
  std::string algorithm;
  std::size_t gridPoints = 0;
  std::size_t refineCandidates = 0;
  std::size_t refinementRounds = 0;
  std::size_t starts = 0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;

  std::string to_string() const;
};

struct ChannelConstant {
  double value;
  ComplexVector argminState;  // pure-state witness
  MethodDescriptor method;
};

ChannelConstant c_of_channel(const KrausChannel& s, const OptimizationBudget& budget = {});

/// λ_min(Ŝ(|ψ⟩⟨ψ|)) without state validation; the optimizer's objective.
double pure_state_objective(const KrausChannel& s, const ComplexVector& psi);

/// Qubit pure state with Bloch unit vector (x, y, z).
ComplexVector qubit_from_bloch(double x, double y, double z);

/// Point i of an n-point Fibonacci grid on the unit sphere.
struct SpherePoint {
  double x, y, z;
};
SpherePoint fibonacci_sphere_point(std::size_t i, std::size_t n);

/// The closed form (1 − |2x − 1|)/2 proposed for the two-Pauli channel.
double two_pauli_c_closed_form(double x);

}  // namespace qdpi
