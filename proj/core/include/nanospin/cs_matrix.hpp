#pragma once

#include <array>
#include <optional>
#include <string>

#include "nanospin/density_matrix.hpp"

namespace nanospin {

/// Hermitian 4x4 centrosymmetric state, stored as its seven real
/// parameters:
///
///     | p1       p2+i p3  p4+i p5  p6      |
///     | p2-i p3  1/2-p1   p7       p4-i p5 |
///     | p4-i p5  p7       1/2-p1   p2-i p3 |
///     | p6       p4+i p5  p2+i p3  p1      |
///
/// The trace is 1 for every parameter choice; positivity is checked by
/// validate_density().
class CSDensityMatrix {
 public:
  using Params = std::array<double, 7>;

  CSDensityMatrix() : p_{0.25, 0, 0, 0, 0, 0, 0} {}
  explicit CSDensityMatrix(const Params& p) : p_(p) {}

  static CSDensityMatrix maximally_mixed() { return CSDensityMatrix{}; }

  const Params& params() const { return p_; }
  double p1() const { return p_[0]; }
  double p2() const { return p_[1]; }
  double p3() const { return p_[2]; }
  double p4() const { return p_[3]; }
  double p5() const { return p_[4]; }
  double p6() const { return p_[5]; }
  double p7() const { return p_[6]; }

  Matrix4c matrix() const;
  DensityMatrix4 to_dense() const { return DensityMatrix4(matrix()); }

  friend bool operator==(const CSDensityMatrix&, const CSDensityMatrix&) = default;

 private:
  Params p_;
};

CSDensityMatrix cs_from_params(double p1, double p2, double p3, double p4, double p5,
                               double p6, double p7);

/// Closed-form spectrum. `branch` keeps the analytic pairing: entries 0,1 are
/// the +/- roots of the (p6 + p7) branch, entries 2,3 of the (-p6 - p7) branch.
struct CSEigenvalues {
  std::array<double, 4> branch{};

  std::array<double, 4> sorted() const;
  double sum() const { return branch[0] + branch[1] + branch[2] + branch[3]; }
};

CSEigenvalues cs_eigenvalues(const CSDensityMatrix& m);

struct CSValidation {
  bool ok = true;
  /// Branch index (0..3) of the most negative violating eigenvalue.
  std::optional<int> violating_index;
  double min_eigenvalue = 0.0;
  std::string message;
};

CSValidation validate_density(const CSDensityMatrix& m, double eps = 1e-10);

/// Bloch data read off the parameters directly. Only T11, T22, T23, T32,
/// T33 and the first components of x and y can be nonzero.
BlochDecomposition bloch_decompose(const CSDensityMatrix& m);

/// True when m(i, j) == m(3 - i, 3 - j) for all 0-based indices, within tol.
bool is_centrosymmetric(const Matrix4c& m, double tol = 0.0);

}  // namespace nanospin
