#include "nanospin/nanopore_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nanospin/errors.hpp"

namespace nanospin {

namespace {
constexpr double kUnderflow = 1e-300;
}

SpinCount SpinCount::finite(long n) {
  if (n < 2) throw DomainError("spin count must be >= 2, got " + std::to_string(n));
  return SpinCount(n);
}

long SpinCount::value() const {
  if (is_limit()) throw DomainError("thermodynamic limit has no finite spin count");
  return n_;
}

double beta_from_temperature(double kelvin, double omega0) {
  if (!(kelvin > 0)) throw DomainError("temperature must be positive");
  return physical::kHbar * omega0 / (physical::kBoltzmann * kelvin);
}

double temperature_from_beta(double beta, double omega0) {
  if (beta < 0) throw DomainError("beta must be >= 0");
  if (beta == 0) return std::numeric_limits<double>::infinity();
  return physical::kHbar * omega0 / (physical::kBoltzmann * beta);
}

double tau_from_time(double coupling_d, double time) { return 1.5 * coupling_d * time; }

double special_time_tau(int l) {
  if (l < 0) throw DomainError("special time index must be >= 0");
  return (1 + 2 * l) * std::numbers::pi / 2.0;
}

double signed_power(double c, long k) {
  if (k == 0) return 1.0;
  if (c == 0.0) return 0.0;
  const double magnitude = std::exp(static_cast<double>(k) * std::log(std::abs(c)));
  if (magnitude < kUnderflow) return 0.0;
  return (c < 0 && (k % 2 != 0)) ? -magnitude : magnitude;
}

CorrelationSet correlations(const NanoporeParams& params) {
  if (params.beta < 0) throw DomainError("beta must be >= 0");
  const double th = std::tanh(0.5 * params.beta);
  CorrelationSet c;
  if (params.spins.is_limit()) {
    c.q = c.r = th * th / 8.0;
    return c;
  }
  const long n = params.spins.value();
  const double cos_tau = std::cos(params.tau);
  c.p = 0.5 * th * signed_power(cos_tau, n - 1);
  const double sum = 0.25 * th * th;
  const double diff = 0.25 * th * th * signed_power(std::cos(2.0 * params.tau), n - 2);
  c.q = 0.5 * (sum + diff);
  c.r = 0.5 * (sum - diff);
  c.u = 0.25 * th * signed_power(cos_tau, n - 2) * std::sin(params.tau);
  return c;
}

CorrelationSet special_time_correlations(SpinCount spins, double beta, int l) {
  if (beta < 0) throw DomainError("beta must be >= 0");
  if (l < 0) throw DomainError("special time index must be >= 0");
  const double th2 = std::pow(std::tanh(0.5 * beta), 2);
  if (spins.is_limit())
    throw DomainError("special times are excluded from the thermodynamic limit");
  CorrelationSet c;
  const double parity = (spins.value() - 2) % 2 == 0 ? 1.0 : -1.0;
  c.q = th2 / 8.0 * (1.0 + parity);
  c.r = th2 / 8.0 * (1.0 - parity);
  // u carries cos^(N-2), which is the empty product only for a lone pair.
  if (spins.value() == 2) c.u = 0.25 * std::tanh(0.5 * beta) * (l % 2 == 0 ? 1.0 : -1.0);
  return c;
}

CSDensityMatrix cs_from_correlations(const CorrelationSet& c) {
  return cs_from_params(0.25, 0.5 * c.p, -c.u, 0.5 * c.p, -c.u, c.q - c.r, c.q + c.r);
}

CSDensityMatrix reduced_density(const NanoporeParams& params) {
  return cs_from_correlations(correlations(params));
}

double concurrence_from_correlations(const CorrelationSet& c) {
  return std::max(0.0, 2.0 * (std::hypot(c.r, 2.0 * c.u) + c.q) - 0.5);
}

double concurrence_nanopore(const NanoporeParams& params) {
  return concurrence_from_correlations(correlations(params));
}

}  // namespace nanospin
