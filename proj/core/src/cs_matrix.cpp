#include "nanospin/cs_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nanospin {

Matrix4c CSDensityMatrix::matrix() const {
  const auto [p1, p2, p3, p4, p5, p6, p7] = p_;
  const Complex a{p2, p3};
  const Complex b{p4, p5};
  const double d = 0.5 - p1;
  Matrix4c m;
  // clang-format off
  m << p1,           a,            b,            p6,
       std::conj(a), d,            p7,           std::conj(b),
       std::conj(b), p7,           d,            std::conj(a),
       p6,           b,            a,            p1;
  // clang-format on
  return m;
}

CSDensityMatrix cs_from_params(double p1, double p2, double p3, double p4, double p5,
                               double p6, double p7) {
  return CSDensityMatrix({p1, p2, p3, p4, p5, p6, p7});
}

std::array<double, 4> CSEigenvalues::sorted() const {
  auto out = branch;
  std::sort(out.begin(), out.end());
  return out;
}

CSEigenvalues cs_eigenvalues(const CSDensityMatrix& m) {
  const auto [p1, p2, p3, p4, p5, p6, p7] = m.params();
  const double even_center = 0.5 * (p6 + p7 + 0.5);
  const double even_radius = std::sqrt(0.25 * std::pow(2 * p1 + p6 - p7 - 0.5, 2) +
                                       std::pow(p2 + p4, 2) + std::pow(p3 + p5, 2));
  const double odd_center = 0.5 * (0.5 - p6 - p7);
  const double odd_radius = std::sqrt(0.25 * std::pow(2 * p1 - p6 + p7 - 0.5, 2) +
                                      std::pow(p2 - p4, 2) + std::pow(p3 - p5, 2));
  return {{even_center + even_radius, even_center - even_radius, odd_center + odd_radius,
           odd_center - odd_radius}};
}

CSValidation validate_density(const CSDensityMatrix& m, double eps) {
  const auto ev = cs_eigenvalues(m);
  CSValidation out;
  const auto it = std::min_element(ev.branch.begin(), ev.branch.end());
  out.min_eigenvalue = *it;
  if (*it < -eps) {
    out.ok = false;
    out.violating_index = static_cast<int>(it - ev.branch.begin());
    std::ostringstream msg;
    msg << "eigenvalue Lambda" << (*out.violating_index + 1) << " = " << *it << " < -" << eps;
    out.message = msg.str();
  }
  return out;
}

BlochDecomposition bloch_decompose(const CSDensityMatrix& m) {
  const auto [p1, p2, p3, p4, p5, p6, p7] = m.params();
  BlochDecomposition b;
  b.T(0, 0) = 2 * (p6 + p7);
  b.T(1, 1) = 2 * (p7 - p6);
  b.T(1, 2) = -4 * p5;
  b.T(2, 1) = -4 * p3;
  b.T(2, 2) = 4 * p1 - 1;
  b.x(0) = 4 * p4;
  b.y(0) = 4 * p2;
  return b;
}

bool is_centrosymmetric(const Matrix4c& m, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(m(i, j) - m(3 - i, 3 - j)) > tol) return false;
  return true;
}

}  // namespace nanospin
