#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle/oracles.hpp"
#include "qdpi/channel.hpp"
#include "qdpi/errors.hpp"
#include "qdpi/rng.hpp"

using namespace qdpi;
using qdpi::test::diag;
using qdpi::test::max_abs_diff;
using qdpi::test::mixed;
using qdpi::test::pure;

namespace {

std::array<double, 3> bloch_of(const DensityMatrix& rho) { return density_to_bloch(rho).a; }

BlochVector random_bloch(Rng& rng) {
  std::array<double, 3> a{rng.normal(), rng.normal(), rng.normal()};
  const double len = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  const double r = rng.uniform();
  for (double& x : a) x *= r / len;
  return BlochVector(a);
}

std::vector<DensityMatrix> test_states(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DensityMatrix> out{mixed(d), pure(d, 0), pure(d, d - 1)};
  for (int i = 0; i < 5; ++i) out.push_back(random_density(d, rng));
  return out;
}

bool same_action(const KrausChannel& a, const KrausChannel& b, double tol) {
  for (const DensityMatrix& rho : test_states(a.dim_in(), 7))
    if (max_abs_diff(apply(a, rho).matrix(), apply(b, rho).matrix()) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("KrausChannel validation names the operator") {
  try {
    KrausChannel({identity(2), ComplexMatrix::Zero(3, 2)});
    FAIL("expected DimensionError");
  } catch (const DimensionError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(KrausChannel({identity(2), identity(2)}), ValidationError);
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), ValidationError);
}

TEST_CASE("apply: identity, erasure, two-Pauli") {
  for (const DensityMatrix& rho : test_states(3, 1)) {
    CHECK(max_abs_diff(apply(identity_channel(3), rho).matrix(), rho.matrix()) < 1e-14);
    CHECK(max_abs_diff(apply(erasure_channel(3), rho).matrix(), matrix_unit(3, 0, 0)) < 1e-14);
  }
  const auto b = bloch_of(apply(two_pauli(0.7), bloch_to_density(BlochVector({1, 0, 0}))));
  CHECK(b[0] == doctest::Approx(0.7));
  CHECK(std::abs(b[1]) < 1e-15);
  CHECK(std::abs(b[2]) < 1e-15);
}

TEST_CASE("apply: dimension mismatch") {
  CHECK_THROWS_AS(apply(identity_channel(2), mixed(3)), DimensionError);
}

TEST_CASE("two_pauli: examples") {
  CHECK(two_pauli(0.3).ops().size() == 3);
  CHECK(same_action(two_pauli(1.0), identity_channel(2), 1e-15));
  const auto b = bloch_of(apply(two_pauli(0.7), pure(2, 0)));
  CHECK(std::abs(b[2] - 0.4) < 1e-14);
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const BlochVector a = random_bloch(rng);
    const auto out = bloch_of(apply(two_pauli(0.5), bloch_to_density(a)));
    CHECK(std::abs(out[0] - a.a[0] / 2) < 1e-14);
    CHECK(std::abs(out[1] - a.a[1] / 2) < 1e-14);
    CHECK(std::abs(out[2]) < 1e-14);
  }
  CHECK_THROWS_AS(two_pauli(1.1), ValidationError);
  CHECK_THROWS_AS(two_pauli(-0.1), ValidationError);
}

TEST_CASE("two_pauli: Bloch action over 100 vectors and 11 parameters") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const BlochVector a = random_bloch(rng);
    for (int k = 0; k <= 10; ++k) {
      const double x = k / 10.0;
      const auto b = bloch_of(apply(two_pauli(x), bloch_to_density(a)));
      CHECK(std::abs(b[0] - a.a[0] * x) < 1e-10);
      CHECK(std::abs(b[1] - a.a[1] * x) < 1e-10);
      CHECK(std::abs(b[2] - a.a[2] * (2 * x - 1)) < 1e-10);
    }
  }
}

TEST_CASE("compose") {
  const KrausChannel s = random_channel(2, 2, 3, 5);
  CHECK(same_action(compose(identity_channel(2), s), s, 1e-12));
  CHECK(same_action(compose(erasure_channel(2), s), erasure_channel(2), 1e-12));

  const double x = 0.3, y = 0.8;
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const BlochVector a = random_bloch(rng);
    const auto b = bloch_of(apply(compose(two_pauli(x), two_pauli(y)), bloch_to_density(a)));
    CHECK(std::abs(b[0] - a.a[0] * x * y) < 1e-12);
    CHECK(std::abs(b[1] - a.a[1] * x * y) < 1e-12);
    CHECK(std::abs(b[2] - a.a[2] * (2 * x - 1) * (2 * y - 1)) < 1e-12);
  }

  const KrausChannel s1 = random_channel(2, 3, 2, 6), s2 = random_channel(3, 2, 2, 7);
  for (const DensityMatrix& rho : test_states(2, 8)) {
    CHECK(max_abs_diff(apply(compose(s2, s1), rho).matrix(),
                       apply(s2, apply(s1, rho)).matrix()) < 1e-12);
  }
  CHECK_THROWS_AS(compose(s1, s1), DimensionError);

  const KrausChannel s3 = random_channel(2, 2, 2, 9);
  const KrausChannel s4 = random_channel(2, 2, 2, 10);
  CHECK(same_action(compose(s4, compose(s3, s)), compose(compose(s4, s3), s), 1e-10));
}

TEST_CASE("mix") {
  const KrausChannel s1 = random_channel(2, 2, 2, 11), s2 = random_channel(2, 2, 3, 12);
  CHECK(same_action(mix(0.0, s1, s2), s2, 1e-14));
  CHECK(same_action(mix(1.0, s1, s2), s1, 1e-14));
  CHECK(max_abs_diff(apply(mix(0.5, identity_channel(2), erasure_channel(2)), mixed(2)).matrix(),
                     diag({0.75, 0.25})) < 1e-15);
  for (const DensityMatrix& rho : test_states(2, 13)) {
    CHECK(max_abs_diff(apply(mix(0.37, s1, s2), rho).matrix(),
                       0.37 * apply(s1, rho).matrix() + 0.63 * apply(s2, rho).matrix()) <
          1e-12);
  }
  CHECK_THROWS_AS(mix(1.5, s1, s2), ValidationError);
  CHECK_THROWS_AS(mix(0.5, s1, identity_channel(3)), DimensionError);
}

TEST_CASE("extend_with_identity") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix phi = projector(bell);
  CHECK(max_abs_diff(apply_operator(extend_with_identity(identity_channel(2), 2), phi), phi) <
        1e-15);

  Rng rng(14);
  const DensityMatrix rr = random_density(3, rng), rho = random_density(2, rng);
  const ComplexMatrix product = kron(rr.matrix(), rho.matrix());
  CHECK(max_abs_diff(apply_operator(extend_with_identity(erasure_channel(2), 3), product),
                     kron(rr.matrix(), matrix_unit(2, 0, 0))) < 1e-14);
  const KrausChannel s = random_channel(2, 2, 3, 15);
  CHECK(max_abs_diff(apply_operator(extend_with_identity(s, 3), product),
                     kron(rr.matrix(), apply(s, rho).matrix())) < 1e-10);
}

TEST_CASE("choi and is_cp") {
  const ChoiMatrix j = choi(identity_channel(2));
  const std::vector<double> ev = oracle::jacobi_eigenvalues(j.mat);
  CHECK(std::abs(ev[0]) < 1e-12);
  CHECK(std::abs(ev[1]) < 1e-12);
  CHECK(std::abs(ev[2]) < 1e-12);
  CHECK(std::abs(ev[3] - 2.0) < 1e-12);
  CHECK(is_cp(choi(two_pauli(0.3)), 1e-9).completelyPositive);

  // Transpose map: J = Σ |i⟩⟨j| ⊗ |j⟩⟨i| is the swap operator.
  ChoiMatrix t{ComplexMatrix::Zero(4, 4), 2, 2};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      t.mat += kron(matrix_unit(2, i, k), matrix_unit(2, k, i));
  const CpCheck cp = is_cp(t, 1e-9);
  CHECK_FALSE(cp.completelyPositive);
  CHECK(cp.minEigenvalue == doctest::Approx(-1.0));
  CHECK(max_abs_diff(apply_choi(t, pauli_y()), pauli_y().transpose()) < 1e-15);

  const KrausChannel s = random_channel(2, 3, 2, 16);
  const ChoiMatrix js = choi(s);
  CHECK(max_abs_diff(partial_trace(js.mat, {2, 3}, Subsystem::Second), identity(2)) < 1e-12);
  Rng rng(17);
  const ComplexMatrix x = ginibre(2, 2, rng);
  CHECK(max_abs_diff(apply_choi(js, x), apply_operator(s, x)) < 1e-12);
}

TEST_CASE("kraus_from_choi round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t k = 1 + seed % 4;
    const KrausChannel s = random_channel(2, 2 + seed % 2, k, seed);
    const ChoiMatrix j = choi(s);
    const KrausChannel rebuilt(kraus_from_choi(j));
    CHECK(rebuilt.ops().size() <= k);
    CHECK(max_abs_diff(choi(rebuilt).mat, j.mat) < 1e-8);
  }
}

TEST_CASE("erasure_channel") {
  CHECK(max_abs_diff(apply(erasure_channel(2), pure(2, 1)).matrix(), matrix_unit(2, 0, 0)) ==
        0.0);
  CHECK(max_abs_diff(apply(erasure_channel(4), mixed(4)).matrix(), matrix_unit(4, 0, 0)) <
        1e-15);
  CHECK(erasure_channel(3).ops().size() == 3);
}

TEST_CASE("random_channel") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t d_in = 2 + seed % 3, d_out = 2 + (seed / 3) % 2;
    const std::size_t k = 1 + seed % 4;
    if (k * d_out < d_in) continue;
    const KrausChannel s = random_channel(d_in, d_out, k, seed);
    ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(d_in),
                                            static_cast<Eigen::Index>(d_in));
    for (const ComplexMatrix& a : s.ops()) sum += a.adjoint() * a;
    CHECK((sum - identity(d_in)).norm() <= 1e-9);
  }
  Rng rng(18);
  const KrausChannel u = random_channel(3, 3, 1, 19);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(3, rng);
    CHECK(std::abs(von_neumann_entropy(apply(u, rho)) - von_neumann_entropy(rho)) < 1e-9);
  }
  const KrausChannel a = random_channel(3, 2, 3, 20), b = random_channel(3, 2, 3, 20);
  for (std::size_t i = 0; i < a.ops().size(); ++i) CHECK(a.ops()[i] == b.ops()[i]);
  CHECK_THROWS_AS(random_channel(4, 2, 1, 0), DimensionError);
}

TEST_CASE("apply preserves trace and Hermiticity") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const KrausChannel s = random_channel(3, 2, 2 + seed % 4, seed);
    for (const DensityMatrix& rho : test_states(3, seed)) {
      const ComplexMatrix out = apply_operator(s, rho.matrix());
      CHECK(std::abs(trace(out) - 1.0) < 1e-10);
      CHECK(hermiticity_deviation(out) < 1e-10);
    }
  }
}

TEST_CASE("decompose_erasure") {
  const ErasureDecomposition known =
      decompose_erasure(mix(0.3, erasure_channel(2), identity_channel(2)), 0.3);
  CHECK(known.cpVerdict);
  CHECK(known.reconstructionResidual < 1e-9);
  REQUIRE_FALSE(known.c2Kraus.empty());
  CHECK(same_action(KrausChannel(known.c2Kraus), identity_channel(2), 1e-9));

  const KrausChannel s = random_channel(2, 2, 3, 21);
  const ErasureDecomposition zero = decompose_erasure(s, 0.0);
  CHECK(zero.cpVerdict);
  CHECK(max_abs_diff(zero.c2.mat, choi(s).mat) < 1e-12);

  // Verdict for the two-Pauli channel at its constant is data, not asserted.
  const ErasureDecomposition tp = decompose_erasure(two_pauli(0.5), 0.25);
  CHECK(tp.reconstructionResidual < 1e-9);
  CHECK(tp.cpVerdict == (tp.minChoiEigenvalue >= -1e-8));

  CHECK_THROWS_AS(decompose_erasure(s, 1.0), ValidationError);
  CHECK_THROWS_AS(decompose_erasure(random_channel(2, 3, 2, 1), 0.1), DimensionError);
}
