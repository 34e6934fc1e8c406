#pragma once

#include <array>

#include "nanospin/cs_matrix.hpp"
#include "nanospin/density_matrix.hpp"

namespace nanospin {

struct ConcurrenceResult {
  /// Square roots of the eigenvalues of rho * spin_flip(rho). The numeric
  /// route stores them in descending order; the closed form keeps its
  /// branch labels.
  std::array<double, 4> lambdas{};
  double concurrence = 0.0;
  double entanglement_of_formation = 0.0;
};

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)
DensityMatrix4 spin_flip(const DensityMatrix4& rho);

/// Binary Shannon entropy in bits.
double binary_entropy(double x);

/// E(C) = H((1 + sqrt(1 - C^2)) / 2).
double entanglement_of_formation(double concurrence);

/// max{0, 2 max(lambda) - sum(lambda)}; no ordering of the input is assumed.
double concurrence_from_lambdas(const std::array<double, 4>& lambdas);

ConcurrenceResult concurrence_numeric(const DensityMatrix4& rho);
ConcurrenceResult concurrence_cs(const CSDensityMatrix& m);

/// The two 2x2 blocks of S M S, S = S^T the orthogonal matrix pairing
/// |00> with |11> and |01> with |10>. `even` acts on ((|00>+|11>)/sqrt2,
/// (|01>+|10>)/sqrt2) and carries the (p6 + p7) eigenvalue branch; `odd`
/// acts on the antisymmetric combinations.
struct CSBlocks {
  Matrix2c even;
  Matrix2c odd;
};

/// The orthogonal symmetric matrix S.
Matrix4c cs_block_transform();

CSBlocks cs_block_diagonalize(const CSDensityMatrix& m);

}  // namespace nanospin
