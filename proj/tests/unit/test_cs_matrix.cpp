#include <doctest.h>

#include <algorithm>
#include <random>

#include "nanospin/cs_matrix.hpp"
#include "nanospin/errors.hpp"
#include "nanospin/nanopore_model.hpp"
#include "nanospin/serialization.hpp"
#include "random_states.hpp"

using namespace nanospin;
using nanospin::testing::max_abs;
using nanospin::testing::random_cs_state;

TEST_CASE("maximally mixed parameters give I/4") {
  const auto m = cs_from_params(0.25, 0, 0, 0, 0, 0, 0);
  CHECK(max_abs(m.matrix() - Matrix4c::Identity() / 4.0) == 0.0);
  CHECK(m == CSDensityMatrix::maximally_mixed());
}

TEST_CASE("p7 fills the inner anti-diagonal") {
  const Matrix4c m = cs_from_params(0.25, 0, 0, 0, 0, 0, 0.25).matrix();
  CHECK(m(1, 2) == Complex(0.25, 0));
  CHECK(m(2, 1) == Complex(0.25, 0));
  CHECK(m(0, 3) == Complex(0, 0));
  CHECK(m(0, 0) == Complex(0.25, 0));
}

TEST_CASE("nanopore parameter map reproduces the reduced-matrix layout") {
  const double p = 0.31, q = 0.11, r = 0.07, u = -0.05;
  const Complex i{0, 1};
  Matrix4c expected;
  // clang-format off
  expected << 0.25,          p / 2 - i * u, p / 2 - i * u, q - r,
              p / 2 + i * u, 0.25,          q + r,         p / 2 + i * u,
              p / 2 + i * u, q + r,         0.25,          p / 2 + i * u,
              q - r,         p / 2 - i * u, p / 2 - i * u, 0.25;
  // clang-format on
  const auto m = cs_from_correlations({p, q, r, u, 0.0});
  CHECK(max_abs(m.matrix() - expected) < 1e-16);
}

TEST_CASE("closed-form spectrum") {
  SUBCASE("maximally mixed") {
    const auto ev = cs_eigenvalues(CSDensityMatrix::maximally_mixed());
    for (double l : ev.branch) CHECK(l == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("Bell-diagonal limit p6 = 0, p7 = 2q") {
    const double q = 0.09;
    const auto ev = cs_eigenvalues(cs_from_params(0.25, 0, 0, 0, 0, 0, 2 * q));
    CHECK(ev.branch[0] == doctest::Approx(0.25 + 2 * q).epsilon(1e-15));
    CHECK(ev.branch[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ev.branch[2] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ev.branch[3] == doctest::Approx(0.25 - 2 * q).epsilon(1e-15));
    Eigen::SelfAdjointEigenSolver<Matrix4c> dense(
        cs_from_params(0.25, 0, 0, 0, 0, 0, 2 * q).matrix());
    const auto sorted = ev.sorted();
    for (int k = 0; k < 4; ++k) CHECK(std::abs(sorted[k] - dense.eigenvalues()(k)) < 1e-15);
  }
  SUBCASE("random states against a dense Hermitian eigensolver") {
    std::mt19937_64 rng(7);
    double worst = 0, worst_trace = 0;
    for (int n = 0; n < 10000; ++n) {
      const auto m = random_cs_state(rng);
      const auto ev = cs_eigenvalues(m);
      Eigen::SelfAdjointEigenSolver<Matrix4c> dense(m.matrix(), Eigen::EigenvaluesOnly);
      const auto sorted = ev.sorted();
      for (int k = 0; k < 4; ++k)
        worst = std::max(worst, std::abs(sorted[k] - dense.eigenvalues()(k)));
      worst_trace = std::max(worst_trace, std::abs(ev.sum() - 1.0));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_trace < 1e-14);
  }
}

TEST_CASE("positivity validation") {
  CHECK(validate_density(CSDensityMatrix::maximally_mixed()).ok);

  const auto bad = validate_density(cs_from_params(0.25, 0, 0, 0, 0, 1.0, 0));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violating_index.has_value());
  CHECK(*bad.violating_index == 3);
  CHECK(bad.min_eigenvalue < 0);
  CHECK(bad.message.find("Lambda") != std::string::npos);

  for (long n : {2L, 3L, 6L, 11L, 50L})
    for (double beta : {0.0, 0.5, 2.0, 10.0, 40.0})
      for (int k = 0; k < 40; ++k) {
        const NanoporeParams params{SpinCount::finite(n), beta, 0.17 * k};
        CHECK(validate_density(reduced_density(params)).ok);
      }
}

TEST_CASE("structure invariants on random parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> any(-1.0, 1.0);
  for (int n = 0; n < 2000; ++n) {
    const CSDensityMatrix m({any(rng), any(rng), any(rng), any(rng), any(rng), any(rng), any(rng)});
    const Matrix4c mat = m.matrix();
    CHECK(is_centrosymmetric(mat));
    CHECK(max_abs(mat - mat.adjoint()) == 0.0);
    CHECK(std::abs(mat.trace() - Complex(1, 0)) < 1e-15);

    const auto bloch = bloch_decompose(m);
    CHECK(max_abs(bloch.reconstruct() - mat) < 1e-14);

    const auto traced = bloch_from_traces(m.to_dense());
    CHECK((traced.T - bloch.T).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((traced.x - bloch.x).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((traced.y - bloch.y).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("Bloch data of special states") {
  const auto mixed = bloch_decompose(CSDensityMatrix::maximally_mixed());
  CHECK(mixed.T.isZero(0));
  CHECK(mixed.x.isZero(0));
  CHECK(mixed.y.isZero(0));

  const double p = 0.2, q = 0.1, r = 0.04, u = 0.03;
  const auto b = bloch_decompose(cs_from_correlations({p, q, r, u, 0}));
  CHECK(b.T(0, 0) == doctest::Approx(4 * q));
  CHECK(b.T(1, 1) == doctest::Approx(4 * r));
  CHECK(b.T(1, 2) == doctest::Approx(4 * u));
  CHECK(b.T(2, 1) == doctest::Approx(4 * u));
  CHECK(b.T(2, 2) == 0.0);
  CHECK(b.x(0) == doctest::Approx(2 * p));
  CHECK(b.y(0) == doctest::Approx(2 * p));
}

TEST_CASE("JSON form of CS and dense matrices") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const auto m = random_cs_state(rng);
    const auto j = to_json(m);
    CHECK(j.at("p").size() == 7);
    CHECK(cs_from_json(nlohmann::json::parse(j.dump())) == m);
    const auto dense = density_from_json(nlohmann::json::parse(to_json(m.to_dense()).dump()));
    CHECK(max_abs(dense.matrix() - m.matrix()) == 0.0);
  }
  CHECK_THROWS_AS(cs_from_json(nlohmann::json{{"p", {1, 2}}}), UsageError);
}
