#pragma once

#include <array>

#include <Eigen/Dense>

namespace contact3 {

enum class FDScheme { Central2, Richardson4 };

struct FDConfig {
  /// Step for first derivatives of the metric and of vector fields.
  double step{1e-5};
  FDScheme scheme{FDScheme::Central2};
  /// Self-consistency bound: a result whose value changes by more than this
  /// when the step is halved is flagged unstable.
  double tolerance{1e-6};
  /// Step for differentiating Christoffel symbols (second derivatives of g).
  double outer_step{1e-3};

  /// Throws std::invalid_argument unless both steps and the tolerance are positive.
  void validate() const;
};

/// Partial derivative along coordinate `axis`. F maps Eigen::Vector3d to any
/// Eigen vector/matrix type.
template <class F>
auto partial(const F& f, const Eigen::Vector3d& p, int axis, double h, FDScheme scheme) {
  auto central = [&](double step) {
    Eigen::Vector3d dp = Eigen::Vector3d::Zero();
    dp(axis) = step;
    return ((f(p + dp) - f(p - dp)) / (2.0 * step)).eval();
  };
  if (scheme == FDScheme::Central2) return central(h);
  return ((4.0 * central(0.5 * h) - central(h)) / 3.0).eval();
}

/// Coordinate Christoffel symbols: gamma[a](b, c) = Gamma^a_{bc}.
using Christoffel = std::array<Eigen::Matrix3d, 3>;

}  // namespace contact3
