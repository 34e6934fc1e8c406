#include "nanospin/exact_oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "nanospin/errors.hpp"

namespace nanospin::oracle {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;

void check_size(int spins, const Limits& limits) {
  if (spins < 1) throw DomainError("oracle needs at least one spin");
  if (spins > limits.max_spins)
    throw ResourceLimitError("oracle limited to N <= " + std::to_string(limits.max_spins) +
                             ", requested " + std::to_string(spins));
}

int bit_of(Index index, int site, int spins) {
  return static_cast<int>((index >> (spins - 1 - site)) & 1);
}

Index with_bit(Index index, int site, int spins, int value) {
  const Index mask = Index{1} << (spins - 1 - site);
  return value ? (index | mask) : (index & ~mask);
}

MatrixXcd kron_dense(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Single-spin operator acting on `site`, identity elsewhere.
MatrixXcd embed(const Matrix2c& op, int site, int spins) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (int k = 0; k < spins; ++k)
    out = kron_dense(out, k == site ? MatrixXcd(op) : MatrixXcd::Identity(2, 2));
  return out;
}

}  // namespace

Eigen::MatrixXcd CollectiveOperators::raising() const { return ix + Complex{0, 1} * iy; }

Eigen::MatrixXcd CollectiveOperators::dipolar_hamiltonian(double coupling_d) const {
  return 0.5 * coupling_d * (3.0 * iz * iz - i_squared);
}

CollectiveOperators build_operators(int spins, const Limits& limits) {
  check_size(spins, limits);
  const Index dim = Index{1} << spins;
  CollectiveOperators ops;
  ops.spins = spins;
  ops.ix = ops.iy = ops.iz = MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < spins; ++k) {
    ops.ix += embed(0.5 * pauli_x(), k, spins);
    ops.iy += embed(0.5 * pauli_y(), k, spins);
    ops.iz += embed(0.5 * pauli_z(), k, spins);
  }
  ops.i_squared = ops.ix * ops.ix + ops.iy * ops.iy + ops.iz * ops.iz;
  return ops;
}

DenseState thermal_initial(int spins, double beta, const Limits& limits) {
  check_size(spins, limits);
  const Matrix2c single = 0.5 * (Matrix2c::Identity() + std::tanh(0.5 * beta) * pauli_x());
  MatrixXcd rho = MatrixXcd::Identity(1, 1);
  for (int k = 0; k < spins; ++k) rho = kron_dense(rho, MatrixXcd(single));
  return {spins, std::move(rho)};
}

double total_magnetization(int spins, Index basis_index) {
  return 0.5 * spins - std::popcount(static_cast<std::uint64_t>(basis_index));
}

DenseState evolve(const DenseState& state, double coupling_a, double time) {
  const Index dim = state.rho.rows();
  const double phase_scale = coupling_a * time;
  Eigen::VectorXcd phase(dim);
  for (Index i = 0; i < dim; ++i) {
    const double m = total_magnetization(state.spins, i);
    phase(i) = std::polar(1.0, -phase_scale * m * m);
  }
  DenseState out{state.spins, state.rho};
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) out.rho(i, j) *= phase(i) * std::conj(phase(j));
  return out;
}

DensityMatrix4 partial_trace_pair(const DenseState& state) {
  if (state.spins < 2) throw DomainError("partial_trace_pair needs N >= 2");
  const Index rest = Index{1} << (state.spins - 2);
  Matrix4c out = Matrix4c::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (Index k = 0; k < rest; ++k) out(a, b) += state.rho(a * rest + k, b * rest + k);
  return DensityMatrix4(out);
}

Complex pair_expectation(const DenseState& state, int spin_i, const Matrix2c& a, int spin_j,
                         const Matrix2c& b) {
  if (spin_i == spin_j) throw DomainError("pair_expectation needs distinct spins");
  const int n = state.spins;
  Complex total{0.0, 0.0};
  // Tr{rho O} = sum rho(row, col) O(col, row), with O nonzero only where
  // col and row agree off sites i and j.
  for (Index row = 0; row < state.rho.rows(); ++row) {
    const int ri = bit_of(row, spin_i, n), rj = bit_of(row, spin_j, n);
    for (int ci = 0; ci < 2; ++ci) {
      for (int cj = 0; cj < 2; ++cj) {
        const Index col = with_bit(with_bit(row, spin_i, n, ci), spin_j, n, cj);
        total += state.rho(row, col) * a(ci, ri) * b(cj, rj);
      }
    }
  }
  return total;
}

Complex single_expectation(const DenseState& state, int spin_i, const Matrix2c& a) {
  const int n = state.spins;
  Complex total{0.0, 0.0};
  for (Index row = 0; row < state.rho.rows(); ++row) {
    const int ri = bit_of(row, spin_i, n);
    for (int ci = 0; ci < 2; ++ci)
      total += state.rho(row, with_bit(row, spin_i, n, ci)) * a(ci, ri);
  }
  return total;
}

MeasuredCorrelations measure_correlations(const DenseState& state) {
  if (state.spins < 2) throw DomainError("measure_correlations needs N >= 2");
  const Matrix2c sx = 0.5 * pauli_x(), sy = 0.5 * pauli_y(), sz = 0.5 * pauli_z();
  MeasuredCorrelations out;
  out.values.p = single_expectation(state, 0, sx).real();
  out.values.q = pair_expectation(state, 0, sx, 1, sx).real();
  out.values.r = pair_expectation(state, 0, sy, 1, sy).real();
  out.values.u = pair_expectation(state, 0, sz, 1, sy).real();
  out.values.v = pair_expectation(state, 0, sz, 1, sz).real();
  out.p_swapped = single_expectation(state, 1, sx).real();
  out.u_swapped = pair_expectation(state, 0, sy, 1, sz).real();
  return out;
}

DenseState nanopore_state(int spins, double beta, double tau, const Limits& limits) {
  return evolve(thermal_initial(spins, beta, limits), 1.0, tau);
}

}  // namespace nanospin::oracle
