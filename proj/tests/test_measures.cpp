#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle/oracles.hpp"
#include "qdpi/channel.hpp"
#include "qdpi/errors.hpp"
#include "qdpi/measures.hpp"
#include "qdpi/rng.hpp"

using namespace qdpi;
using qdpi::test::diag;
using qdpi::test::ket;
using qdpi::test::mixed;
using qdpi::test::pure;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

Ensemble mm2() { return Ensemble({0.5, 0.5}, {ket({1.0, 0.0}), ket({0.0, 1.0})}); }
Ensemble pm2() { return Ensemble({0.5, 0.5}, {ket({kR, kR}), ket({kR, -kR})}); }

/// Entropy exchange straight from the Kraus operators: evolve the
/// purification vector by I ⊗ A and diagonalize with the oracle.
double oracle_entropy_exchange(const Ensemble& e, const KrausChannel& s) {
  const std::size_t n = e.size(), d = e.dim(), m = s.dim_out();
  const std::size_t side = n * m;
  oracle::Dense rho(side, std::vector<oracle::Cplx>(side));
  for (const ComplexMatrix& a : s.ops()) {
    std::vector<oracle::Cplx> v(side);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t o = 0; o < m; ++o) {
        oracle::Cplx acc = 0.0;
        for (std::size_t k = 0; k < d; ++k)
          acc += a(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(k)) *
                 e.states()[i](static_cast<Eigen::Index>(k));
        v[i * m + o] = std::sqrt(e.probs()[i]) * acc;
      }
    }
    for (std::size_t r = 0; r < side; ++r)
      for (std::size_t c = 0; c < side; ++c) rho[r][c] += v[r] * std::conj(v[c]);
  }
  return oracle::entropy_bits(oracle::jacobi_eigenvalues(rho));
}

}  // namespace

TEST_CASE("coherent_information: examples") {
  const CoherentInfoResult id = coherent_information(mm2(), identity_channel(2));
  CHECK(std::abs(id.mutualInfo - 1.0) < 1e-12);
  CHECK(std::abs(id.entropyExchange) < 1e-12);

  const Ensemble single({1.0}, {ket({kR, Complex(0.0, kR)})});
  CHECK(std::abs(coherent_information(single, random_channel(2, 2, 1, 3)).mutualInfo) < 1e-12);

  const CoherentInfoResult tp = coherent_information(mm2(), two_pauli(0.5));
  CHECK(std::abs(tp.mutualInfo - (-0.5)) < 1e-8);
  CHECK(std::abs(tp.outputEntropy - 1.0) < 1e-12);
  CHECK(std::abs(tp.entropyExchange - oracle_entropy_exchange(mm2(), two_pauli(0.5))) < 1e-9);
  CHECK(std::abs(oracle_entropy_exchange(mm2(), two_pauli(0.5)) - 1.5) < 1e-9);
}

TEST_CASE("coherent_information: invariants and oracle agreement") {
  Rng rng(61);
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 2;
    const Ensemble e = random_ensemble(2 + t % 2, d, rng);
    const KrausChannel s = random_channel(d, 2 + (t / 2) % 2, 1 + t % 4 + (d > 2), 1000 + t);
    const CoherentInfoResult r = coherent_information(e, s);
    CHECK(std::abs(r.mutualInfo - (r.outputEntropy - r.entropyExchange)) <= 1e-12);
    CHECK(std::abs(r.mutualInfo) <= r.outputEntropy + r.entropyExchange + 1e-9);
    CHECK(std::abs(r.entropyExchange - oracle_entropy_exchange(e, s)) < 1e-9);
    const double s_rho = von_neumann_entropy(ensemble_to_density(e));
    CHECK(std::abs(coherent_information(e, identity_channel(d)).mutualInfo - s_rho) < 1e-9);
  }
  CHECK_THROWS_AS(coherent_information(mm2(), identity_channel(3)), DimensionError);
}

TEST_CASE("coherent_information: independent of the purifying ensemble") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KrausChannel s = random_channel(2, 2, 1 + seed % 4, seed);
    CHECK(std::abs(coherent_information(mm2(), s).mutualInfo -
                   coherent_information(pm2(), s).mutualInfo) < 1e-9);
  }
}

TEST_CASE("relative_entropy_identity") {
  const RelativeEntropyIdentity bell = relative_entropy_identity(mm2(), identity_channel(2));
  REQUIRE(bell.consistent());
  CHECK(std::abs(bell.lhs.value() - 2.0) < 1e-9);
  CHECK(std::abs(bell.rhs - 2.0) < 1e-9);

  // The joint state always lives inside supp(ρᴿ) ⊗ supp(Ŝρ), so even a
  // rank-deficient output keeps the left side finite.
  const RelativeEntropyIdentity erased = relative_entropy_identity(mm2(), erasure_channel(2));
  CHECK(std::isfinite(erased.rhs));
  REQUIRE(erased.consistent());
  CHECK(std::abs(erased.lhs.value() - erased.rhs) < 1e-9);

  Rng rng(67);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Ensemble e = random_ensemble(1 + t % 3, 2, rng);
    const KrausChannel s = random_channel(2, 2, 1 + t % 4, 5000 + t);
    const RelativeEntropyIdentity r = relative_entropy_identity(e, s);
    if (r.lhs.is_finite()) CHECK(std::abs(r.lhs.value() - r.rhs) <= 1e-8);
  }
}

TEST_CASE("c_at_state") {
  CHECK(std::abs(c_at_state(two_pauli(0.7), mixed(2)) - 0.5) < 1e-12);
  CHECK(std::abs(c_at_state(two_pauli(0.7), pure(2, 0)) - 0.3) < 1e-12);
  CHECK(std::abs(c_at_state(identity_channel(2), pure(2, 1))) < 1e-12);
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    const KrausChannel s = random_channel(3, 3, 2, static_cast<std::uint64_t>(t));
    const double c = c_at_state(s, random_density(3, rng));
    CHECK(c >= -1e-10);
    CHECK(c <= 1.0 / 3.0 + 1e-9);
  }
}

TEST_CASE("weyl_bounds: examples") {
  const std::vector<WeylBound> w = weyl_bounds(diag({0, 1}), diag({0, 2}));
  REQUIRE(w.size() == 2);
  CHECK(w[0].value == doctest::Approx(0.0));
  CHECK(w[0].lower == doctest::Approx(0.0));
  CHECK(w[0].upper == doctest::Approx(1.0));
  CHECK(w[1].value == doctest::Approx(3.0));
  CHECK(w[1].lower == doctest::Approx(2.0));
  CHECK(w[1].upper == doctest::Approx(3.0));
  CHECK_FALSE(w[0].violated);
  CHECK_FALSE(w[1].violated);

  Rng rng(73);
  const ComplexMatrix a = random_hermitian(4, rng);
  const RealVector spec = hermitian_eigenvalues(a);
  for (const WeylBound& b : weyl_bounds(a, ComplexMatrix::Zero(4, 4))) {
    const double ak = spec(static_cast<Eigen::Index>(b.k - 1));
    CHECK(std::abs(b.lower - ak) < 1e-12);
    CHECK(std::abs(b.upper - ak) < 1e-12);
    CHECK(std::abs(b.value - ak) < 1e-12);
  }
  CHECK_THROWS_AS(weyl_bounds(identity(2), identity(3)), DimensionError);
  ComplexMatrix bad = identity(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(weyl_bounds(bad, identity(2)), NonHermitianError);
}

TEST_CASE("weyl_bounds: random pairs agree with oracle spectra") {
  Rng rng(79);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 6);
    const ComplexMatrix a = random_hermitian(d, rng), b = random_hermitian(d, rng);
    const std::vector<double> sa = oracle::jacobi_eigenvalues(a),
                              sb = oracle::jacobi_eigenvalues(b),
                              sc = oracle::jacobi_eigenvalues(ComplexMatrix(a + b));
    for (const WeylBound& w : weyl_bounds(a, b)) {
      const std::size_t k = w.k - 1, n = d - 1;
      CHECK_FALSE(w.violated);
      CHECK(std::abs(w.value - sc[k]) < 1e-9);
      CHECK(std::abs(w.lower - std::max(sa[0] + sb[k], sb[0] + sa[k])) < 1e-9);
      CHECK(std::abs(w.upper - std::min(sb[k] + sa[n], sa[k] + sb[n])) < 1e-9);
    }
  }
}

TEST_CASE("mixture_spectrum_bounds") {
  Rng rng(83);
  const DensityMatrix rho = random_density(3, rng);
  const RealVector spec = hermitian_eigenvalues(rho.matrix());
  for (const SpectrumInterval& iv : mixture_spectrum_bounds(rho, 0.0)) {
    const double rk = spec(static_cast<Eigen::Index>(iv.k - 1));
    CHECK(iv.lower <= rk + 1e-12);
    CHECK(iv.upper >= rk - 1e-12);
    if (iv.k >= 2) {
      CHECK(std::abs(iv.lower - rk) < 1e-12);
      CHECK(std::abs(iv.upper - rk) < 1e-12);
    }
  }

  const std::vector<SpectrumInterval> half =
      mixture_spectrum_bounds(DensityMatrix(diag({0.75, 0.25})), 0.5);
  CHECK(half[0].lower == doctest::Approx(-0.25));
  CHECK(half[0].upper == doctest::Approx(0.25));
  CHECK(half[0].lower <= 0.25);
  CHECK(0.25 <= half[0].upper);

  CHECK_THROWS_AS(mixture_spectrum_bounds(rho, 1.0), ValidationError);
  CHECK_THROWS_AS(mixture_spectrum_bounds(rho, -0.1), ValidationError);
}

TEST_CASE("mixture_spectrum_bounds: constructed mixtures") {
  Rng rng(89);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
    const DensityMatrix sigma = random_density(d, rng);
    const double c = 0.95 * rng.uniform();
    const DensityMatrix rho_prime(c * matrix_unit(d, 0, 0) + (1 - c) * sigma.matrix());
    const std::vector<double> s = oracle::jacobi_eigenvalues(sigma.matrix());
    for (const SpectrumInterval& iv : mixture_spectrum_bounds(rho_prime, c)) {
      const double v = s[iv.k - 1] * (1 - c);
      CHECK(v >= iv.lower - 1e-9);
      CHECK(v <= iv.upper + 1e-9);
    }
  }
}
