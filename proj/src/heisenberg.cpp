// Exponential map of the left-invariant Heisenberg metric at the identity.
//
// Along a geodesic the frame components w = (w1, w2, w3) of the velocity obey
// w3' = 0 and (w1 + i w2)' = 2 i w3 (w1 + i w2), so z = w1 + i w2 rotates at
// rate omega = 2 w3. In matrix coordinates the velocity is
// (2 w1, -2 w2, 2 w1 u2 + 2 w3), which integrates in closed form for u1, u2
// and by quadrature for t.

#include <cmath>
#include <complex>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/sinc.hpp>

#include "contact3/model_spaces.hpp"

namespace contact3 {

namespace {

using cplx = std::complex<double>;

// int_0^s z0 exp(i omega r) dr, stable as omega -> 0.
cplx integrated_rotation(cplx z0, double omega, double s) {
  const double half = 0.5 * omega * s;
  return z0 * s * std::polar(1.0, half) * boost::math::sinc_pi(half);
}

}  // namespace

Eigen::Vector3d heisenberg_exp(const Eigen::Vector3d& x) {
  const cplx z0(x(0), x(1));
  const double omega = 2.0 * x(2);

  const cplx zint = integrated_rotation(z0, omega, 1.0);
  const double u1 = 2.0 * zint.real();
  const double u2 = -2.0 * zint.imag();

  auto integrand = [&](double s) {
    const double w1 = (z0 * std::polar(1.0, omega * s)).real();
    const double u2s = -2.0 * integrated_rotation(z0, omega, s).imag();
    return w1 * u2s;
  };
  const double lift = boost::math::quadrature::gauss<double, 30>::integrate(integrand, 0.0, 1.0);
  const double t = 2.0 * x(2) + 2.0 * lift;
  return {u1, u2, t};
}

Eigen::Vector3d heisenberg_log(const Eigen::Vector3d& q) {
  // d exp at 0 is diag(2, -2, 2).
  Eigen::Vector3d x(0.5 * q(0), -0.5 * q(1), 0.5 * q(2));
  constexpr double kJacStep = 1e-7;
  const double scale = 1.0 + q.cwiseAbs().maxCoeff();

  Eigen::Vector3d r = heisenberg_exp(x) - q;
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::Matrix3d jac;
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d dx = Eigen::Vector3d::Zero();
      dx(k) = kJacStep;
      jac.col(k) = (heisenberg_exp(x + dx) - heisenberg_exp(x - dx)) / (2.0 * kJacStep);
    }
    const Eigen::Vector3d step = jac.partialPivLu().solve(r);
    // backtrack so the residual never grows; far from the identity the
    // full step can overshoot into a neighbouring sheet of exp
    double t = 1.0;
    Eigen::Vector3d trial = x - step;
    Eigen::Vector3d rt = heisenberg_exp(trial) - q;
    while (rt.norm() > r.norm() && t > 1e-6) {
      t *= 0.5;
      trial = x - t * step;
      rt = heisenberg_exp(trial) - q;
    }
    x = trial;
    r = rt;
    if (t * step.cwiseAbs().maxCoeff() <= 1e-15 * (1.0 + x.cwiseAbs().maxCoeff())) break;
  }
  const double resid = r.cwiseAbs().maxCoeff();
  if (!(resid <= 1e-12 * scale)) {
    throw std::runtime_error("heisenberg_log: Newton iteration did not converge");
  }
  return x;
}

}  // namespace contact3
