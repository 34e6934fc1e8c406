#pragma once

#include <numbers>

#include "nanospin/cs_matrix.hpp"

namespace nanospin {

/// Number of spins in the pore, or the N -> infinity limit taken at generic
/// times (tau not a multiple of pi/2).
class SpinCount {
 public:
  /// Throws DomainError for n < 2.
  static SpinCount finite(long n);
  static SpinCount thermodynamic_limit() { return SpinCount{}; }

  bool is_limit() const { return n_ == 0; }
  /// Throws DomainError for the limit value.
  long value() const;

  friend bool operator==(SpinCount, SpinCount) = default;

 private:
  SpinCount() = default;
  explicit SpinCount(long n) : n_(n) {}
  long n_ = 0;
};

struct NanoporeParams {
  SpinCount spins = SpinCount::thermodynamic_limit();
  /// hbar omega0 / (k_B T), >= 0.
  double beta = 0.0;
  /// a t with a = 3D/2.
  double tau = 0.0;
};

/// Pair correlators <I1x>, <I1x I2x>, <I1y I2y>, <I1z I2y>, <I1z I2z>.
struct CorrelationSet {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  double u = 0.0;
  double v = 0.0;
};

namespace physical {
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K
inline constexpr double kDefaultLarmorFrequency = 2.0 * std::numbers::pi * 500e6;  // rad / s
}  // namespace physical

double beta_from_temperature(double kelvin,
                             double omega0 = physical::kDefaultLarmorFrequency);
/// Infinity for beta = 0.
double temperature_from_beta(double beta, double omega0 = physical::kDefaultLarmorFrequency);
/// tau = 3 D t / 2.
double tau_from_time(double coupling_d, double time);

/// (1 + 2l) pi / 2, where one of q, r vanishes.
double special_time_tau(int l);

/// sign(c)^k |c|^k evaluated as exp(k ln|c|); k = 0 gives 1, results below
/// 1e-300 are flushed to 0.
double signed_power(double c, long k);

/// Throws DomainError for beta < 0.
CorrelationSet correlations(const NanoporeParams& params);

/// Correlators at tau = (1 + 2l) pi / 2 from the parity formulas. p = 0 always;
/// u = 0 for N >= 3, while N = 2 keeps u = (-1)^l tanh(beta/2) / 4.
CorrelationSet special_time_correlations(SpinCount spins, double beta, int l);

/// p1 = 1/4, p2 = p4 = p/2, p3 = p5 = -u, p6 = q - r, p7 = q + r.
CSDensityMatrix cs_from_correlations(const CorrelationSet& c);
CSDensityMatrix reduced_density(const NanoporeParams& params);

/// max{0, 2 (sqrt(r^2 + 4u^2) + q) - 1/2}.
double concurrence_from_correlations(const CorrelationSet& c);
double concurrence_nanopore(const NanoporeParams& params);

}  // namespace nanospin
