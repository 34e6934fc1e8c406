#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

namespace nanospin {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

/// Pauli matrices in the basis {|0>, |1>} with sigma_z|0> = |0>.
Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();
/// index 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z.
Matrix2c pauli(int index);

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

struct Tolerances {
  double psd = 1e-10;
  double hermitian = 1e-12;
  double trace = 1e-12;
};

struct ValidationReport {
  bool ok = true;
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  std::string message;
};

/// Generic two-qubit state in the computational basis
/// {|00>, |01>, |10>, |11>}; the first qubit is the most significant one.
class DensityMatrix4 {
 public:
  DensityMatrix4() : m_(Matrix4c::Identity() / 4.0) {}
  explicit DensityMatrix4(const Matrix4c& m) : m_(m) {}

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  ValidationReport validate(const Tolerances& tol = {}) const;

  /// Throws InvalidInputError naming `context` when validate() fails.
  void require_valid(const char* context, const Tolerances& tol = {}) const;

  /// Reduced states of the first (A) and second (B) qubit.
  Matrix2c reduce_to_first() const;
  Matrix2c reduce_to_second() const;

  /// Eigenvalues in ascending order (Hermitian part of the stored matrix).
  Eigen::Vector4d eigenvalues() const;

 private:
  Matrix4c m_;
};

DensityMatrix4 product_state(const Matrix2c& a, const Matrix2c& b);

/// Conjugation by a local unitary U_A (x) U_B.
DensityMatrix4 apply_local_unitary(const DensityMatrix4& rho, const Matrix2c& ua,
                                   const Matrix2c& ub);

/// Exchange of the two qubits.
DensityMatrix4 swap_qubits(const DensityMatrix4& rho);

/// Full Bloch data rho = 1/4 [1 + x.s (x) 1 + 1 (x) y.s + T_ij s_i (x) s_j],
/// extracted from traces against Pauli products.
struct BlochDecomposition {
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();

  Matrix4c reconstruct() const;
};

BlochDecomposition bloch_from_traces(const DensityMatrix4& rho);

/// Coefficients alpha^{ab} of rho = sum alpha^{ab} I^a (x) I^b with I^0 the
/// identity and I^k = sigma_k / 2. Weights: 4 Tr{..} for a,b >= 1, Tr{..}
/// when exactly one index is 0, Tr{..}/4 for a = b = 0.
std::array<std::array<double, 4>, 4> spin_expansion_coefficients(const DensityMatrix4& rho);

/// Von Neumann entropy in bits; eigenvalues below 1e-14 count as 0.
double von_neumann_entropy(const Matrix2c& rho);
double von_neumann_entropy(const DensityMatrix4& rho);
/// Entropy of a qubit with Bloch vector length r (1/2 (1 +- r) spectrum).
double qubit_entropy_from_bloch_length(double r);

/// -x log2 x, with the 0 log2 0 = 0 convention.
double shannon_term(double x);

}  // namespace nanospin
