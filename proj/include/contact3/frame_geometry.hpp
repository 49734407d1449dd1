#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>

namespace contact3 {

// Frame index convention: 0 = e1, 1 = e2, 2 = xi (Reeb field), with phi e1 = e2.
inline constexpr int kE1 = 0;
inline constexpr int kE2 = 1;
inline constexpr int kXi = 2;

/// Constant structure functions (a, b, c, mu) of a contact metric 3-manifold
/// in an orthonormal frame {e1, e2 = phi e1, xi} with h e1 = mu e1.
struct StructureFunctions {
  double a{};
  double b{};
  double c{};
  double mu{};

  [[nodiscard]] bool finite() const;
};

/// Directional derivatives of mu along the frame. Zero for the Lie-group models.
struct MuDerivatives {
  double xi_mu{};
  double e1_mu{};
  double e2_mu{};
};

/// gamma[i][j][k] is the e_k-coefficient of nabla_{e_i} e_j.
struct FrameConnection {
  std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};

  double operator()(int i, int j, int k) const { return gamma[i][j][k]; }

  /// Coefficient of e_k in [e_i, e_j] = nabla_{e_i} e_j - nabla_{e_j} e_i.
  [[nodiscard]] double bracket(int i, int j, int k) const {
    return gamma[i][j][k] - gamma[j][i][k];
  }
};

/// R[i][j][k][l] = g(R(e_i, e_j) e_k, e_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
struct CurvatureTensor {
  std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> R{};

  double operator()(int i, int j, int k, int l) const { return R[i][j][k][l]; }

  /// K(e_i, e_j) = g(R(e_i, e_j) e_j, e_i).
  [[nodiscard]] double sectional(int i, int j) const { return R[i][j][j][i]; }

  /// Ric(e_j, e_k) = sum_i g(R(e_i, e_j) e_k, e_i).
  [[nodiscard]] Eigen::Matrix3d ricci() const;
};

/// Symmetric Ricci tensor in the frame (e1, e2, xi).
class RicciMatrix {
 public:
  RicciMatrix() = default;
  /// Symmetrizes the input; the upper triangle wins.
  explicit RicciMatrix(const Eigen::Matrix3d& m);
  static RicciMatrix diagonal(double r11, double r22, double r33);

  double operator()(int i, int j) const { return ric_(i, j); }
  [[nodiscard]] const Eigen::Matrix3d& matrix() const { return ric_; }

 private:
  Eigen::Matrix3d ric_ = Eigen::Matrix3d::Zero();
};

/// phi, h, A = phi h, eta and xi in frame components.
struct ContactTensors {
  Eigen::Matrix3d phi;
  Eigen::Matrix3d h;
  Eigen::Matrix3d A;
  Eigen::Vector3d eta;
  Eigen::Vector3d xi;
};

ContactTensors contact_tensors(double mu);

/// The Levi-Civita connection table of a contact metric 3-manifold in the
/// frame {e1, e2, xi}. Metric compatible by construction.
FrameConnection connection_from_structure(const StructureFunctions& sf);

/// Ricci operator in the frame. Off-diagonal and xi-xi entries follow the
/// closed form; Ric(e1,e1) and Ric(e2,e2) have no closed form in general and
/// are passed in.
RicciMatrix ricci_operator_lemma1(const StructureFunctions& sf, const MuDerivatives& dmu,
                                  double ric11, double ric22);

/// Frame curvature of a connection with constant coefficients. Only
/// meaningful when the reconstructed brackets satisfy the Jacobi identity,
/// see jacobi_defect().
CurvatureTensor curvature_from_connection(const FrameConnection& conn);

/// Largest component of [e_i,[e_j,e_k]] + cyclic over the frame, using the
/// brackets reconstructed from the connection. Zero iff the constant
/// connection comes from a genuine Lie algebra.
double jacobi_defect(const FrameConnection& conn);

struct AlphaBeta {
  double alpha{};
  double beta{};
};

/// Returns (alpha, beta) if R(X,Y)xi = alpha(eta(Y)X - eta(X)Y) + beta(eta(Y)hX - eta(X)hY)
/// holds on every frame pair within tol. When h = 0 beta is unconstrained and
/// reported as 0.
std::optional<AlphaBeta> alpha_beta_identify(const CurvatureTensor& curv,
                                             const StructureFunctions& sf, double tol);

/// max over x, y, z in {e1, e2} of |g((nabla_x h) y, z)|.
/// Only e1(mu) and e2(mu) enter.
double eta_parallel_residual(const StructureFunctions& sf, const MuDerivatives& dmu);

}  // namespace contact3
