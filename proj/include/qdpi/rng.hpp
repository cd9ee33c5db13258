#pragma once

// Seeded random instances. The generator is splitmix64 and normals come from
// Box–Muller, so a (seed, index) pair reproduces the same draw on any
// platform with IEEE doubles and a conforming libm.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "qdpi/linalg.hpp"
#include "qdpi/state.hpp"

namespace qdpi {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t state_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : bits_(seed) {}

  std::uint64_t next_u64() { return bits_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n);
  /// Standard normal (Box–Muller; the second variate of each pair is cached).
  double normal();
  /// Complex normal with independent N(0, 1/2) parts, so E|z|² = 1.
  Complex complex_normal();

 private:
  SplitMix64 bits_;
  std::optional<double> cached_normal_;
};

/// Complex standard-normal matrix.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed isometry (rows ≥ cols): Q from the QR decomposition of
/// a complex normal matrix, with columns rephased so diag(R) is positive.
ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);
ComplexVector haar_vector(std::size_t d, Rng& rng);

/// Full-rank random state GG†/tr(GG†) with G Ginibre.
DensityMatrix random_density(std::size_t d, Rng& rng);
/// Random Hermitian (G + G†)/2.
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);
/// Flat (Dirichlet(1,…,1)) sample on the probability simplex.
std::vector<double> random_simplex(std::size_t n, Rng& rng);
/// n Haar vectors in C^d with flat simplex weights.
Ensemble random_ensemble(std::size_t n, std::size_t d, Rng& rng);

}  // namespace qdpi
