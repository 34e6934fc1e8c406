#include "nanospin/geometric_discord.hpp"

#include <algorithm>
#include <cmath>

namespace nanospin {

namespace {
constexpr double kCancellationLimit = 1e-8;
constexpr double kClamp = 1e-12;
}  // namespace

double KMatrixSpectrum::max() const { return *std::max_element(k.begin(), k.end()); }

KMatrixSpectrum k_spectrum_cs(const CSDensityMatrix& m, LocalSide side) {
  const auto [p1, p2, p3, p4, p5, p6, p7] = m.params();
  const double local = side == LocalSide::First ? p4 : p2;
  // T T^T and T^T T share the lower 2x2 spectrum; the side only changes
  // which local vector is added to the isolated x-axis eigenvalue.
  const double k1 = 16 * local * local + 4 * std::pow(p6 + p7, 2);

  const double upper = 8 * p5 * p5 + 2 * std::pow(p7 - p6, 2);
  const double lower = 8 * p3 * p3 + 0.5 * std::pow(4 * p1 - 1, 2);
  const double coupling = p5 * (4 * p1 - 1) + 2 * p3 * (p7 - p6);
  const double radius = std::sqrt(std::pow(upper - lower, 2) + 16 * coupling * coupling);
  const double centre = upper + lower;
  const double k2 = centre + radius;
  double k3 = centre - radius;
  if (k2 > 0 && k3 < kCancellationLimit * k2) {
    // Product of the two roots is det(T_low)^2 with T_low the lower 2x2
    // block of T; avoids the cancellation in centre - radius.
    const double det = 2 * (p7 - p6) * (4 * p1 - 1) - 16 * p5 * p3;
    k3 = det * det / k2;
  }
  if (k3 < 0 && k3 > -kClamp) k3 = 0.0;
  return {{k1, k2, k3}};
}

KMatrixSpectrum k_spectrum_generic(const DensityMatrix4& rho, LocalSide side) {
  const auto b = bloch_from_traces(rho);
  const Eigen::Vector3d& v = side == LocalSide::First ? b.x : b.y;
  const Eigen::Matrix3d tt = side == LocalSide::First ? Eigen::Matrix3d(b.T * b.T.transpose())
                                                      : Eigen::Matrix3d(b.T.transpose() * b.T);
  const Eigen::Matrix3d k = v * v.transpose() + tt;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(k, Eigen::EigenvaluesOnly);
  KMatrixSpectrum out;
  for (int i = 0; i < 3; ++i) {
    const double ev = solver.eigenvalues()(i);
    out.k[i] = ev < 0 && ev > -kClamp ? 0.0 : ev;
  }
  return out;
}

double geometric_discord_cs(const CSDensityMatrix& m, LocalSide side) {
  const auto spectrum = k_spectrum_cs(m, side);
  return 0.5 * (spectrum.sum() - spectrum.max());
}

double geometric_discord_generic(const DensityMatrix4& rho, LocalSide side) {
  rho.require_valid("geometric_discord_generic");
  const auto b = bloch_from_traces(rho);
  const Eigen::Vector3d& v = side == LocalSide::First ? b.x : b.y;
  const auto spectrum = k_spectrum_generic(rho, side);
  return 0.5 * (v.squaredNorm() + b.T.squaredNorm() - spectrum.max());
}

double geometric_discord_nanopore(double beta) { return std::pow(std::tanh(0.5 * beta), 4) / 8.0; }

double geometric_discord_high_temperature(double beta) { return std::pow(beta, 4) / 128.0; }

}  // namespace nanospin
