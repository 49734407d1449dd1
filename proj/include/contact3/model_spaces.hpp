#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "contact3/frame_geometry.hpp"

namespace contact3 {

/// Unimodular Lie group with Sasakian structure:
/// [e1,e2] = 2 e3, [e2,e3] = c1 e1, [e3,e1] = c1 e2.
struct SasakianModel {
  double c1{};
};

/// Non-Sasakian contact (alpha, beta)-space in dimension three. alpha is
/// always derived, never stored.
class NonSasakianModel {
 public:
  /// Throws std::invalid_argument unless mu > 0 and both values are finite.
  NonSasakianModel(double mu, double beta);

  [[nodiscard]] double mu() const { return mu_; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double alpha() const { return 1.0 - mu_ * mu_; }

  /// (a, b, c, mu) = (-beta/2, 0, 0, mu).
  [[nodiscard]] StructureFunctions structure() const;

 private:
  double mu_;
  double beta_;
};

struct SasakianData {
  StructureFunctions structure;
  FrameConnection connection;
  RicciMatrix ricci;
  ContactTensors tensors;
};

/// Connection and closed-form Ricci diag(2c1-2, 2c1-2, 2) of the Sasakian
/// model. The frame data are (a, b, c, mu) = (c1 - 1, 0, 0, 0).
SasakianData sasakian_model(double c1);

struct NonSasakianData {
  StructureFunctions structure;
  RicciMatrix ricci;
};

/// Ricci S = -beta I + beta h + (2 alpha + beta) eta (x) xi in the frame.
/// Throws std::invalid_argument for mu <= 0.
NonSasakianData nonsasakian_model(double mu, double beta);

/// (eta, xi, phi, g) plus d eta in frame components, all with respect to one
/// fixed basis. deta(i, j) = d eta(e_i, e_j).
struct ContactMetricStructure {
  Eigen::Vector3d eta;
  Eigen::Vector3d xi;
  Eigen::Matrix3d phi;
  Eigen::Matrix3d g;
  Eigen::Matrix3d deta;
};

/// The standard structure of the orthonormal frame {e1, e2, xi}:
/// g = I and d eta(X, Y) = g(X, phi Y).
ContactMetricStructure frame_contact_structure();

/// D-homothetic deformation (eps eta, xi / eps, phi, eps g + eps(eps - 1) eta (x) eta).
/// Throws std::invalid_argument for eps <= 0.
ContactMetricStructure d_homothetic(const ContactMetricStructure& s, double eps);

/// Largest violation of eta(xi) = 1, eta = g(., xi), phi^2 = -I + xi eta and
/// d eta(X, Y) = g(X, phi Y).
double contact_compatibility_defect(const ContactMetricStructure& s);

enum class LieGroup { SU2, SL2R, E2, E11, Nil };

/// Either a single group or a candidate set. unit_sphere marks the c1 = 2
/// Sasakian model (round S^3 = SU(2)).
struct GroupTag {
  std::vector<LieGroup> candidates;
  bool unit_sphere{false};

  [[nodiscard]] bool unique() const { return candidates.size() == 1; }
  bool operator==(const GroupTag&) const = default;
};

std::string to_string(LieGroup g);
std::string to_string(const GroupTag& tag);

GroupTag classify_group(const SasakianModel& m);
GroupTag classify_group(const NonSasakianModel& m);

/// A metric on a coordinate patch of R^3 together with an adapted frame.
/// frame(p) has the coordinate components of e1, e2, xi as its columns.
struct ChartMetric {
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> metric;
  std::function<Eigen::Matrix3d(const Eigen::Vector3d&)> frame;
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> eta;
  /// Riemannian normal coordinates centred at the origin of the chart, if known.
  std::function<Eigen::Vector3d(const Eigen::Vector3d&)> to_normal;
};

/// Heisenberg group in matrix coordinates (u1, u2, t):
/// eta = (dt - u2 du1)/2, xi = 2 d/dt, g = eta (x) eta + ((du1)^2 + (du2)^2)/4,
/// e1 = 2(d/du1 + u2 d/dt), e2 = -2 d/du2 so that [e1, e2] = 2 xi.
ChartMetric heisenberg_chart();

/// Euclidean R^3 with the coordinate frame. Test fixture for the FD machinery.
ChartMetric flat_chart();

/// Riemannian exponential map of the Heisenberg metric at the identity.
/// x holds components along (e1, e2, xi); the result is in matrix coordinates.
Eigen::Vector3d heisenberg_exp(const Eigen::Vector3d& x);

/// Inverse of heisenberg_exp by Newton iteration. Valid on the injectivity
/// domain around the identity (|x3| well below pi/2).
/// Throws std::runtime_error if Newton fails to converge.
Eigen::Vector3d heisenberg_log(const Eigen::Vector3d& q);

}  // namespace contact3
