#pragma once

#include <array>

#include "nanospin/cs_matrix.hpp"
#include "nanospin/density_matrix.hpp"

namespace nanospin {

/// Which local Bloch vector enters K = v v^T + M. `First` uses x and
/// T T^T; `Second` uses y and T^T T (discord with the roles swapped).
enum class LocalSide { First, Second };

struct KMatrixSpectrum {
  /// k[0] is the isolated (x-axis) eigenvalue for CS input; generic input
  /// stores the spectrum in ascending order.
  std::array<double, 3> k{};

  double sum() const { return k[0] + k[1] + k[2]; }
  double max() const;
};

KMatrixSpectrum k_spectrum_cs(const CSDensityMatrix& m, LocalSide side = LocalSide::First);
KMatrixSpectrum k_spectrum_generic(const DensityMatrix4& rho, LocalSide side = LocalSide::First);

/// Q_g = 1/2 (k1 + k2 + k3 - k_max).
double geometric_discord_cs(const CSDensityMatrix& m, LocalSide side = LocalSide::First);

/// Q_g = 1/2 (|x|^2 + |T|^2 - k_max) from the full Bloch data.
/// Throws InvalidInputError for non-physical input.
double geometric_discord_generic(const DensityMatrix4& rho, LocalSide side = LocalSide::First);

/// tanh^4(beta/2) / 8, the large-N nanopore value.
double geometric_discord_nanopore(double beta);

/// beta^4 / 128.
double geometric_discord_high_temperature(double beta);

}  // namespace nanospin
