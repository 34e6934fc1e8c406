#include "nanospin/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nanospin/errors.hpp"

namespace nanospin {

namespace {
constexpr double kEntropyCutoff = 1e-14;
const Complex kI{0.0, 1.0};
}  // namespace

Matrix2c pauli_x() { return (Matrix2c() << 0, 1, 1, 0).finished(); }
Matrix2c pauli_y() { return (Matrix2c() << 0, -kI, kI, 0).finished(); }
Matrix2c pauli_z() { return (Matrix2c() << 1, 0, 0, -1).finished(); }

Matrix2c pauli(int index) {
  switch (index) {
    case 0: return Matrix2c::Identity();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw DomainError("pauli index must be 0..3");
  }
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

ValidationReport DensityMatrix4::validate(const Tolerances& tol) const {
  ValidationReport report;
  report.hermiticity_error = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  report.trace_error = std::abs(m_.trace() - Complex{1.0, 0.0});
  report.min_eigenvalue = eigenvalues().minCoeff();

  std::ostringstream msg;
  if (report.hermiticity_error > tol.hermitian) {
    report.ok = false;
    msg << "not Hermitian (max |M - M^H| = " << report.hermiticity_error << "); ";
  }
  if (report.trace_error > tol.trace) {
    report.ok = false;
    msg << "trace differs from 1 by " << report.trace_error << "; ";
  }
  if (report.min_eigenvalue < -tol.psd) {
    report.ok = false;
    msg << "negative eigenvalue " << report.min_eigenvalue << "; ";
  }
  report.message = msg.str();
  return report;
}

void DensityMatrix4::require_valid(const char* context, const Tolerances& tol) const {
  const auto report = validate(tol);
  if (!report.ok) throw InvalidInputError(std::string(context) + ": " + report.message);
}

Matrix2c DensityMatrix4::reduce_to_first() const {
  Matrix2c out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out(a, b) = m_(2 * a, 2 * b) + m_(2 * a + 1, 2 * b + 1);
  return out;
}

Matrix2c DensityMatrix4::reduce_to_second() const {
  Matrix2c out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out(a, b) = m_(a, b) + m_(a + 2, b + 2);
  return out;
}

Eigen::Vector4d DensityMatrix4::eigenvalues() const {
  const Matrix4c herm = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix4 product_state(const Matrix2c& a, const Matrix2c& b) {
  return DensityMatrix4(kron(a, b));
}

DensityMatrix4 apply_local_unitary(const DensityMatrix4& rho, const Matrix2c& ua,
                                   const Matrix2c& ub) {
  const Matrix4c u = kron(ua, ub);
  return DensityMatrix4(u * rho.matrix() * u.adjoint());
}

DensityMatrix4 swap_qubits(const DensityMatrix4& rho) {
  // |ab> -> |ba>: indices 1 (01) and 2 (10) exchange.
  constexpr int perm[4] = {0, 2, 1, 3};
  Matrix4c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(perm[i], perm[j]) = rho(i, j);
  return DensityMatrix4(out);
}

Matrix4c BlochDecomposition::reconstruct() const {
  Matrix4c out = Matrix4c::Identity();
  for (int i = 0; i < 3; ++i) {
    out += x(i) * kron(pauli(i + 1), Matrix2c::Identity());
    out += y(i) * kron(Matrix2c::Identity(), pauli(i + 1));
    for (int j = 0; j < 3; ++j) out += T(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return out / 4.0;
}

BlochDecomposition bloch_from_traces(const DensityMatrix4& rho) {
  BlochDecomposition b;
  const Matrix4c& m = rho.matrix();
  for (int i = 0; i < 3; ++i) {
    b.x(i) = (m * kron(pauli(i + 1), Matrix2c::Identity())).trace().real();
    b.y(i) = (m * kron(Matrix2c::Identity(), pauli(i + 1))).trace().real();
    for (int j = 0; j < 3; ++j) b.T(i, j) = (m * kron(pauli(i + 1), pauli(j + 1))).trace().real();
  }
  return b;
}

std::array<std::array<double, 4>, 4> spin_expansion_coefficients(const DensityMatrix4& rho) {
  std::array<std::array<double, 4>, 4> alpha{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const Matrix2c ia = a == 0 ? Matrix2c::Identity() : Matrix2c(0.5 * pauli(a));
      const Matrix2c ib = b == 0 ? Matrix2c::Identity() : Matrix2c(0.5 * pauli(b));
      const double tr = (rho.matrix() * kron(ia, ib)).trace().real();
      const int zeros = (a == 0) + (b == 0);
      const double weight = zeros == 0 ? 4.0 : (zeros == 1 ? 1.0 : 0.25);
      alpha[a][b] = weight * tr;
    }
  }
  return alpha;
}

double shannon_term(double x) {
  if (x <= kEntropyCutoff) return 0.0;
  return -x * std::log2(x);
}

double von_neumann_entropy(const Matrix2c& rho) {
  const Matrix2c herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix2c> solver(herm, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double ev : solver.eigenvalues()) s += shannon_term(ev);
  return s;
}

double von_neumann_entropy(const DensityMatrix4& rho) {
  double s = 0.0;
  for (double ev : rho.eigenvalues()) s += shannon_term(ev);
  return s;
}

double qubit_entropy_from_bloch_length(double r) {
  r = std::clamp(r, 0.0, 1.0);
  return shannon_term(0.5 * (1.0 + r)) + shannon_term(0.5 * (1.0 - r));
}

}  // namespace nanospin
