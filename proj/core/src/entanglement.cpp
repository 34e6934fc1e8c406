#include "nanospin/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "nanospin/errors.hpp"

namespace nanospin {

namespace {

constexpr double kNegativeEigenvalueLimit = 1e-10;
constexpr double kRadicandError = 1e-9;

// Valid states give nonnegative radicands up to rounding; anything past
// -kRadicandError means the parameters are not a state.
double checked_sqrt(double radicand) {
  if (radicand < -kRadicandError)
    throw InconsistentParametersError("negative radicand " + std::to_string(radicand) +
                                      " in closed-form concurrence");
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

DensityMatrix4 spin_flip(const DensityMatrix4& rho) {
  const Matrix4c yy = kron(pauli_y(), pauli_y());
  return DensityMatrix4(yy * rho.matrix().conjugate() * yy);
}

double binary_entropy(double x) { return shannon_term(x) + shannon_term(1.0 - x); }

double entanglement_of_formation(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double concurrence_from_lambdas(const std::array<double, 4>& lambdas) {
  const double largest = *std::max_element(lambdas.begin(), lambdas.end());
  const double total = lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3];
  return std::max(0.0, 2.0 * largest - total);
}

ConcurrenceResult concurrence_numeric(const DensityMatrix4& rho) {
  rho.require_valid("concurrence_numeric");

  // With rho = V D^2 V^H, the lambdas are the singular values of
  // D (V^H Y V^*) D, Y = sigma_y (x) sigma_y. This avoids taking square roots
  // of the eigenvalues of rho * rho~, which loses half the digits of small
  // lambdas.
  const Matrix4c herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm);
  const Eigen::Vector4d& mu = solver.eigenvalues();
  if (mu.minCoeff() < -kNegativeEigenvalueLimit)
    throw InvalidInputError("concurrence_numeric: rho has eigenvalue " +
                            std::to_string(mu.minCoeff()));
  const Eigen::Vector4cd root = mu.cwiseMax(0.0).cwiseSqrt().cast<Complex>();
  const Matrix4c& v = solver.eigenvectors();
  const Matrix4c yy = kron(pauli_y(), pauli_y());
  const Matrix4c tau = root.asDiagonal() * (v.adjoint() * yy * v.conjugate()) * root.asDiagonal();
  Eigen::JacobiSVD<Matrix4c> svd(tau);

  ConcurrenceResult out;
  for (int i = 0; i < 4; ++i) out.lambdas[i] = svd.singularValues()(i);
  std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
  out.concurrence = concurrence_from_lambdas(out.lambdas);
  out.entanglement_of_formation = entanglement_of_formation(out.concurrence);
  return out;
}

ConcurrenceResult concurrence_cs(const CSDensityMatrix& m) {
  const auto [p1, p2, p3, p4, p5, p6, p7] = m.params();

  const double even_a =
      std::sqrt(std::pow(2 * p1 + p6 - 0.5 - p7, 2) + 4 * std::pow(p3 + p5, 2));
  const double even_b = checked_sqrt(std::pow(0.5 + p6 + p7, 2) - 4 * std::pow(p2 + p4, 2));
  const double odd_a =
      std::sqrt(std::pow(2 * p1 - p6 - 0.5 + p7, 2) + 4 * std::pow(p3 - p5, 2));
  const double odd_b = checked_sqrt(std::pow(0.5 - p6 - p7, 2) - 4 * std::pow(p2 - p4, 2));

  ConcurrenceResult out;
  out.lambdas = {0.5 * (even_a + even_b), 0.5 * std::abs(even_a - even_b),
                 0.5 * (odd_a + odd_b), 0.5 * std::abs(odd_a - odd_b)};
  out.concurrence = concurrence_from_lambdas(out.lambdas);
  out.entanglement_of_formation = entanglement_of_formation(out.concurrence);
  return out;
}

Matrix4c cs_block_transform() {
  Matrix4c s;
  // clang-format off
  s << 1, 0,  0,  1,
       0, 1,  1,  0,
       0, 1, -1,  0,
       1, 0,  0, -1;
  // clang-format on
  return s / std::numbers::sqrt2;
}

CSBlocks cs_block_diagonalize(const CSDensityMatrix& m) {
  const Matrix4c s = cs_block_transform();
  const Matrix4c t = s * m.matrix() * s;
  return {t.block<2, 2>(0, 0), t.block<2, 2>(2, 2)};
}

}  // namespace nanospin
