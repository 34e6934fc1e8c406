#include <doctest.h>

#include <algorithm>
#include <random>

#include "nanospin/entanglement.hpp"
#include "nanospin/errors.hpp"
#include "random_states.hpp"

using namespace nanospin;
using namespace nanospin::testing;

namespace {

std::array<double, 4> sorted_desc(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("spin flip") {
  const DensityMatrix4 mixed;
  CHECK(max_abs(spin_flip(mixed).matrix() - mixed.matrix()) < 1e-16);

  const auto bell = bell_phi_plus();
  CHECK(max_abs(spin_flip(bell).matrix() - bell.matrix()) < 1e-16);

  std::mt19937_64 rng(3);
  for (int n = 0; n < 500; ++n) {
    const auto m = random_cs_state(rng);
    CHECK(is_centrosymmetric(spin_flip(m.to_dense()).matrix(), 1e-15));
    // rho * rho~ inherits the centrosymmetric structure.
    const Matrix4c product = m.matrix() * spin_flip(m.to_dense()).matrix();
    CHECK(is_centrosymmetric(product, 1e-15));
  }
}

TEST_CASE("Shannon function and entanglement of formation") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entanglement_of_formation(0.0) == 0.0);
  CHECK(entanglement_of_formation(1.0) == doctest::Approx(1.0).epsilon(1e-15));

  double previous = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double e = entanglement_of_formation(k / 1000.0);
    CHECK(e > previous);
    CHECK(e <= 1.0 + 1e-15);
    previous = e;
  }
}

TEST_CASE("numeric concurrence of reference states") {
  const auto bell = concurrence_numeric(bell_phi_plus());
  CHECK(bell.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bell.entanglement_of_formation == doctest::Approx(1.0).epsilon(1e-10));

  const auto mixed = concurrence_numeric(DensityMatrix4{});
  CHECK(mixed.concurrence == 0.0);
  CHECK(mixed.entanglement_of_formation == 0.0);
  for (double l : mixed.lambdas) CHECK(l == doctest::Approx(0.25).epsilon(1e-14));

  // Werner state w |Phi+><Phi+| + (1 - w) I/4 has C = max(0, (3w - 1)/2).
  for (double w : {0.1, 1.0 / 3.0, 0.5, 0.9}) {
    const DensityMatrix4 werner(w * bell_phi_plus().matrix() + (1 - w) * Matrix4c::Identity() / 4.0);
    CHECK(concurrence_numeric(werner).concurrence ==
          doctest::Approx(std::max(0.0, (3 * w - 1) / 2)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form concurrence") {
  const auto mixed = concurrence_cs(CSDensityMatrix::maximally_mixed());
  for (double l : mixed.lambdas) CHECK(l == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(mixed.concurrence == 0.0);

  SUBCASE("entangled CS state with a large inner coherence") {
    const auto m = cs_from_params(0.1, 0, 0, 0, 0, 0, 0.35);
    const auto closed = concurrence_cs(m);
    const auto numeric = concurrence_numeric(m.to_dense());
    CHECK(closed.concurrence > 0.0);
    CHECK(closed.concurrence == doctest::Approx(numeric.concurrence).epsilon(1e-12));
  }

  SUBCASE("random states agree with the spectral oracle") {
    std::mt19937_64 rng(17);
    double worst_c = 0, worst_lambda = 0, worst_e = 0;
    for (int n = 0; n < 10000; ++n) {
      const auto m = random_cs_state(rng);
      const auto closed = concurrence_cs(m);
      const auto numeric = concurrence_numeric(m.to_dense());
      worst_c = std::max(worst_c, std::abs(closed.concurrence - numeric.concurrence));
      worst_e = std::max(worst_e, std::abs(closed.entanglement_of_formation -
                                           numeric.entanglement_of_formation));
      const auto a = sorted_desc(closed.lambdas);
      for (int k = 0; k < 4; ++k)
        worst_lambda = std::max(worst_lambda, std::abs(a[k] - numeric.lambdas[k]));
    }
    CHECK(worst_lambda < 1e-10);
    CHECK(worst_c < 1e-9);
    CHECK(worst_e < 1e-8);
  }

  SUBCASE("clearly inconsistent parameters are rejected") {
    CHECK_THROWS_AS(concurrence_cs(cs_from_params(0.25, 0.5, 0, -0.5, 0, 0, 0)),
                    InconsistentParametersError);
  }
}

TEST_CASE("radical identities behind the simplified lambdas") {
  std::mt19937_64 rng(23);
  double worst = 0;
  for (int n = 0; n < 10000; ++n) {
    const auto [p1, p2, p3, p4, p5, p6, p7] = random_cs_state(rng).params();
    (void)p2, (void)p3, (void)p4, (void)p5;
    const double lhs1 = 2 * (std::pow(p1 + p6, 2) + std::pow(0.5 - p1 + p7, 2));
    const double rhs1 = std::pow(2 * p1 + p6 - 0.5 - p7, 2) + std::pow(0.5 + p6 + p7, 2);
    const double lhs2 = 2 * (std::pow(p1 - p6, 2) + std::pow(0.5 - p1 - p7, 2));
    const double rhs2 = std::pow(2 * p1 - p6 - 0.5 + p7, 2) + std::pow(0.5 - p6 - p7, 2);
    worst = std::max({worst, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)});
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("separable product states have zero concurrence") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> beta(0.0, 20.0);
  for (int n = 0; n < 200; ++n) {
    // Thermal qubits polarized along x: (1 + tanh(b/2) sigma_x) / 2.
    const double t1 = std::tanh(0.5 * beta(rng)), t2 = std::tanh(0.5 * beta(rng));
    const Matrix2c a = 0.5 * (Matrix2c::Identity() + t1 * pauli_x());
    const Matrix2c b = 0.5 * (Matrix2c::Identity() + t2 * pauli_x());
    const auto closed = concurrence_cs(cs_from_params(0.25, t2 / 4, 0, t1 / 4, 0, t1 * t2 / 4,
                                                      t1 * t2 / 4));
    CHECK(closed.concurrence == 0.0);
    CHECK(concurrence_numeric(product_state(a, b)).concurrence == 0.0);
    CHECK(concurrence_numeric(product_state(random_qubit(rng), random_qubit(rng))).concurrence ==
          0.0);
  }
}

TEST_CASE("numeric concurrence rejects non-physical input") {
  Matrix4c m = Matrix4c::Identity() / 4.0;
  m(0, 0) = -0.25;
  m(1, 1) = 0.75;
  CHECK_THROWS_AS(concurrence_numeric(DensityMatrix4(m)), InvalidInputError);
}

TEST_CASE("block diagonalization by the S transform") {
  const Matrix4c s = cs_block_transform();
  CHECK(max_abs(s - s.transpose()) == 0.0);
  CHECK(max_abs(s * s - Matrix4c::Identity()) < 1e-15);

  const auto mixed = cs_block_diagonalize(CSDensityMatrix::maximally_mixed());
  CHECK((mixed.even - Matrix2c::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-16);
  CHECK((mixed.odd - Matrix2c::Identity() / 4.0).cwiseAbs().maxCoeff() < 1e-16);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> any(-0.2, 0.2);
  for (int n = 0; n < 1000; ++n) {
    const auto m = random_cs_state(rng);
    const Matrix4c full = s * m.matrix() * s;
    CHECK(full.block<2, 2>(0, 2).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(full.block<2, 2>(2, 0).cwiseAbs().maxCoeff() < 1e-15);

    const auto blocks = cs_block_diagonalize(m);
    Eigen::SelfAdjointEigenSolver<Matrix2c> even(blocks.even), odd(blocks.odd);
    const auto ev = cs_eigenvalues(m);
    CHECK(even.eigenvalues()(1) == doctest::Approx(ev.branch[0]).epsilon(1e-12));
    CHECK(even.eigenvalues()(0) == doctest::Approx(ev.branch[1]).scale(1).epsilon(1e-12));
    CHECK(odd.eigenvalues()(1) == doctest::Approx(ev.branch[2]).epsilon(1e-12));
    CHECK(odd.eigenvalues()(0) == doctest::Approx(ev.branch[3]).scale(1).epsilon(1e-12));

    // Real parameters (p3 = p5 = 0) give real blocks.
    const auto real = cs_block_diagonalize(
        cs_from_params(0.25 + any(rng), any(rng), 0, any(rng), 0, any(rng), any(rng)));
    CHECK(real.even.imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK(real.odd.imag().cwiseAbs().maxCoeff() == 0.0);
  }
}
