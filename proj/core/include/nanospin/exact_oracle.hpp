#pragma once

#include <Eigen/Dense>

#include "nanospin/density_matrix.hpp"
#include "nanospin/nanopore_model.hpp"

namespace nanospin::oracle {

struct Limits {
  int max_spins = 10;
};

/// Dense 2^N x 2^N state. Spin 1 is the most significant bit of the basis
/// index; bit value 0 means m = +1/2.
struct DenseState {
  int spins = 0;
  Eigen::MatrixXcd rho;
};

/// Collective spin components (hbar = 1) built by Kronecker products.
struct CollectiveOperators {
  int spins = 0;
  Eigen::MatrixXcd ix, iy, iz, i_squared;

  Eigen::MatrixXcd raising() const;
  /// (D/2)(3 Iz^2 - I^2).
  Eigen::MatrixXcd dipolar_hamiltonian(double coupling_d) const;
};

/// Throws ResourceLimitError when N > limits.max_spins, DomainError for N < 1.
CollectiveOperators build_operators(int spins, const Limits& limits = {});

/// rho0 = exp(beta Ix) / Z, assembled as the N-fold product of
/// (1 + tanh(beta/2) sigma_x) / 2.
DenseState thermal_initial(int spins, double beta, const Limits& limits = {});

/// Total Iz eigenvalue of a computational basis state.
double total_magnetization(int spins, Eigen::Index basis_index);

/// exp(-i a t Iz^2) rho exp(i a t Iz^2), applied as diagonal phases.
DenseState evolve(const DenseState& state, double coupling_a, double time);

/// Trace over spins 3..N.
DensityMatrix4 partial_trace_pair(const DenseState& state);

/// Tr{rho (A on spin i) (B on spin j)}, identity elsewhere; i != j, 0-based.
Complex pair_expectation(const DenseState& state, int spin_i, const Matrix2c& a, int spin_j,
                         const Matrix2c& b);
/// Tr{rho (A on spin i)}.
Complex single_expectation(const DenseState& state, int spin_i, const Matrix2c& a);

struct MeasuredCorrelations {
  CorrelationSet values;
  /// The same correlators with spins 1 and 2 exchanged (<I2x>, <I1y I2z>).
  double p_swapped = 0.0;
  double u_swapped = 0.0;
};

/// Correlators as full-space traces, independent of partial_trace_pair.
MeasuredCorrelations measure_correlations(const DenseState& state);

/// Thermal state at beta evolved to dimensionless time tau.
DenseState nanopore_state(int spins, double beta, double tau, const Limits& limits = {});

}  // namespace nanospin::oracle
