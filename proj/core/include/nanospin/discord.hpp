#pragma once

#include <Eigen/Dense>

#include "nanospin/density_matrix.hpp"

namespace nanospin {

enum class Subsystem { A, B };

/// Von Neumann measurement on one qubit along
/// n = (sin theta cos phi, sin theta sin phi, cos theta).
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d direction() const;
  /// (1 + sign n.sigma) / 2 with sign = +1 or -1.
  Matrix2c projector(int sign) const;
};

struct DiscordResult {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  MeasurementBasis optimum;
};

struct DiscordOptions {
  int theta_points = 64;
  int phi_points = 128;
  /// Stop refining once a full sweep improves the objective by less.
  double tolerance = 1e-8;
  Subsystem measured = Subsystem::B;
};

/// Entropic discord of the Bell-diagonal state with c1 = c2 = 4q, c3 = 0
/// (the large-N nanopore pair), in bits.
/// Throws DomainError when |8q| > 1.
double discord_bell_diagonal(double q);

/// Low-temperature expansion 3/4 log2(4/3) - beta e^{-beta} / sqrt(2).
/// Not meaningful for small beta; at beta = 0 it returns 3/4 log2(4/3).
double discord_low_temperature(double beta);

/// High-temperature expansion beta^4 / (128 ln 2).
double discord_high_temperature(double beta);

/// Classical correlation J = S(rho_unmeasured) - sum_k p_k S(rho_unmeasured|k)
/// for one fixed measurement on `measured`.
double classical_correlation_for(const DensityMatrix4& rho, const MeasurementBasis& basis,
                                 Subsystem measured = Subsystem::B);

/// Discord I - max_basis J, with the maximum found by a deterministic
/// (theta, phi) grid followed by golden-section refinement.
/// Throws InvalidInputError for non-physical input.
DiscordResult discord_numeric(const DensityMatrix4& rho, const DiscordOptions& options = {});

/// Mutual information S(A) + S(B) - S(AB) in bits.
double mutual_information(const DensityMatrix4& rho);

}  // namespace nanospin
