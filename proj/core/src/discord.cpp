#include "nanospin/discord.hpp"

#include <cmath>
#include <numbers>

#include "nanospin/errors.hpp"

namespace nanospin {

namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt5 - 1) / 2
constexpr int kMaxRefineSweeps = 200;
constexpr double kAngleTolerance = 1e-11;

// x log2 x with 0 log2 0 = 0.
double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

// Bloch data arranged for a measurement on one side: `kept` is the Bloch
// vector of the unmeasured qubit, `probe` that of the measured one, and
// `corr` maps the measurement direction onto the kept qubit.
struct SideView {
  Eigen::Vector3d kept;
  Eigen::Vector3d probe;
  Eigen::Matrix3d corr;
};

SideView side_view(const BlochDecomposition& b, Subsystem measured) {
  if (measured == Subsystem::B) return {b.x, b.y, b.T};
  return {b.y, b.x, b.T.transpose()};
}

// Average conditional entropy of the kept qubit after measuring along n.
double conditional_entropy(const SideView& v, const Eigen::Vector3d& n) {
  double total = 0.0;
  for (int sign : {+1, -1}) {
    const double weight = 1.0 + sign * v.probe.dot(n);
    const double prob = 0.5 * weight;
    if (prob <= 1e-15) continue;
    const Eigen::Vector3d conditional = (v.kept + sign * (v.corr * n)) / weight;
    total += prob * qubit_entropy_from_bloch_length(conditional.norm());
  }
  return total;
}

Eigen::Vector3d direction_of(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

template <class F>
double golden_minimize(F&& f, double lo, double hi, double& best_value) {
  double a = lo, b = hi;
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kAngleTolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  best_value = f(x);
  return x;
}

MeasurementBasis canonical(double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0) theta += two_pi;
  if (theta > std::numbers::pi) {
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0) phi += two_pi;
  return {theta, phi};
}

}  // namespace

Eigen::Vector3d MeasurementBasis::direction() const { return direction_of(theta, phi); }

Matrix2c MeasurementBasis::projector(int sign) const {
  const Eigen::Vector3d n = direction();
  Matrix2c p = Matrix2c::Identity();
  for (int i = 0; i < 3; ++i) p += static_cast<double>(sign) * n(i) * pauli(i + 1);
  return 0.5 * p;
}

double discord_bell_diagonal(double q) {
  if (std::abs(8.0 * q) > 1.0 + 1e-15)
    throw DomainError("discord_bell_diagonal: |8q| must not exceed 1, got q = " +
                      std::to_string(q));
  const double e = std::min(std::abs(8.0 * q), 1.0), h = 0.5 * e;
  if (e < 0.125) {
    // The logarithm form cancels to O(e^2); sum the even power series instead.
    double sum = 0.0, e2k = 1.0;
    for (int k = 1; k < 40; ++k) {
      e2k *= e * e;
      const double term = e2k * (0.25 - 0.5 * std::pow(0.25, k)) / (k * (2.0 * k - 1.0));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum / std::numbers::ln2;
  }
  return 0.25 * (xlog2x(1.0 + e) + xlog2x(1.0 - e)) - 0.5 * xlog2x(1.0 + h) -
         0.5 * xlog2x(1.0 - h);
}

double discord_low_temperature(double beta) {
  return 0.75 * std::log2(4.0 / 3.0) - beta * std::exp(-beta) / std::numbers::sqrt2;
}

double discord_high_temperature(double beta) {
  return std::pow(beta, 4) / (128.0 * std::numbers::ln2);
}

double mutual_information(const DensityMatrix4& rho) {
  return von_neumann_entropy(rho.reduce_to_first()) + von_neumann_entropy(rho.reduce_to_second()) -
         von_neumann_entropy(rho);
}

double classical_correlation_for(const DensityMatrix4& rho, const MeasurementBasis& basis,
                                 Subsystem measured) {
  const auto view = side_view(bloch_from_traces(rho), measured);
  return qubit_entropy_from_bloch_length(view.kept.norm()) -
         conditional_entropy(view, basis.direction());
}

DiscordResult discord_numeric(const DensityMatrix4& rho, const DiscordOptions& options) {
  rho.require_valid("discord_numeric");
  if (options.theta_points < 2 || options.phi_points < 1)
    throw UsageError("discord_numeric: grid needs >= 2 theta and >= 1 phi points");

  const auto view = side_view(bloch_from_traces(rho), options.measured);
  const auto objective = [&](double theta, double phi) {
    return conditional_entropy(view, direction_of(theta, phi));
  };

  const double d_theta = std::numbers::pi / (options.theta_points - 1);
  const double d_phi = 2.0 * std::numbers::pi / options.phi_points;

  // Strict comparison keeps the lexicographically first (theta, phi) on ties.
  double best = objective(0.0, 0.0);
  double theta = 0.0, phi = 0.0;
  for (int i = 0; i < options.theta_points; ++i) {
    for (int j = 0; j < options.phi_points; ++j) {
      const double t = i * d_theta, f = j * d_phi;
      const double value = objective(t, f);
      if (value < best) {
        best = value;
        theta = t;
        phi = f;
      }
    }
  }

  for (int sweep = 0; sweep < kMaxRefineSweeps; ++sweep) {
    const double before = best;
    double value = 0.0;
    const double t = golden_minimize([&](double x) { return objective(x, phi); },
                                     theta - d_theta, theta + d_theta, value);
    if (value < best) {
      best = value;
      theta = t;
    }
    const double f = golden_minimize([&](double x) { return objective(theta, x); },
                                     phi - d_phi, phi + d_phi, value);
    if (value < best) {
      best = value;
      phi = f;
    }
    if (before - best < options.tolerance) break;
  }

  DiscordResult out;
  out.mutual_information = mutual_information(rho);
  out.classical_correlation = qubit_entropy_from_bloch_length(view.kept.norm()) - best;
  out.discord = out.mutual_information - out.classical_correlation;
  out.optimum = canonical(theta, phi);
  return out;
}

}  // namespace nanospin
