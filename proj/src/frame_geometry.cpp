#include "contact3/frame_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace contact3 {

bool StructureFunctions::finite() const {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(mu);
}

Eigen::Matrix3d CurvatureTensor::ricci() const {
  Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int i = 0; i < 3; ++i) ric(j, k) += R[i][j][k][i];
    }
  }
  return ric;
}

RicciMatrix::RicciMatrix(const Eigen::Matrix3d& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      ric_(i, j) = m(i, j);
      ric_(j, i) = m(i, j);
    }
  }
}

RicciMatrix RicciMatrix::diagonal(double r11, double r22, double r33) {
  return RicciMatrix(Eigen::Vector3d(r11, r22, r33).asDiagonal().toDenseMatrix());
}

ContactTensors contact_tensors(double mu) {
  ContactTensors t;
  t.phi << 0.0, -1.0, 0.0,
           1.0, 0.0, 0.0,
           0.0, 0.0, 0.0;
  t.h = Eigen::Vector3d(mu, -mu, 0.0).asDiagonal();
  t.A = t.phi * t.h;
  t.eta = Eigen::Vector3d::UnitZ();
  t.xi = Eigen::Vector3d::UnitZ();
  return t;
}

FrameConnection connection_from_structure(const StructureFunctions& sf) {
  const double a = sf.a;
  const double b = sf.b;
  const double c = sf.c;
  const double mu = sf.mu;

  FrameConnection conn;
  auto& g = conn.gamma;
  // nabla_{e1}
  g[kE1][kE1] = {0.0, b, 0.0};
  g[kE1][kE2] = {-b, 0.0, 1.0 + mu};
  g[kE1][kXi] = {0.0, -(1.0 + mu), 0.0};
  // nabla_{e2}
  g[kE2][kE1] = {0.0, -c, mu - 1.0};
  g[kE2][kE2] = {c, 0.0, 0.0};
  g[kE2][kXi] = {1.0 - mu, 0.0, 0.0};
  // nabla_{xi}
  g[kXi][kE1] = {0.0, a, 0.0};
  g[kXi][kE2] = {-a, 0.0, 0.0};
  g[kXi][kXi] = {0.0, 0.0, 0.0};
  return conn;
}

RicciMatrix ricci_operator_lemma1(const StructureFunctions& sf, const MuDerivatives& dmu,
                                  double ric11, double ric22) {
  Eigen::Matrix3d m;
  const double r12 = dmu.xi_mu;
  const double r13 = 2.0 * sf.b * sf.mu - dmu.e2_mu;
  const double r23 = 2.0 * sf.c * sf.mu - dmu.e1_mu;
  m << ric11, r12, r13,
       r12, ric22, r23,
       r13, r23, 2.0 * (1.0 - sf.mu * sf.mu);
  return RicciMatrix(m);
}

CurvatureTensor curvature_from_connection(const FrameConnection& conn) {
  CurvatureTensor curv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          double s = 0.0;
          for (int m = 0; m < 3; ++m) {
            s += conn(j, k, m) * conn(i, m, l);
            s -= conn(i, k, m) * conn(j, m, l);
            s -= conn.bracket(i, j, m) * conn(m, k, l);
          }
          curv.R[i][j][k][l] = s;
        }
      }
    }
  }
  return curv;
}

double jacobi_defect(const FrameConnection& conn) {
  // [e_i, [e_j, e_k]] with constant structure constants.
  auto nested = [&](int i, int j, int k, int out) {
    double s = 0.0;
    for (int m = 0; m < 3; ++m) s += conn.bracket(j, k, m) * conn.bracket(i, m, out);
    return s;
  };
  double worst = 0.0;
  for (int out = 0; out < 3; ++out) {
    const double s = nested(0, 1, 2, out) + nested(1, 2, 0, out) + nested(2, 0, 1, out);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

std::optional<AlphaBeta> alpha_beta_identify(const CurvatureTensor& curv,
                                             const StructureFunctions& sf, double tol) {
  // R(e1,xi)xi = (alpha + beta mu) e1 and R(e2,xi)xi = (alpha - beta mu) e2.
  const double k1 = curv.sectional(kE1, kXi);
  const double k2 = curv.sectional(kE2, kXi);
  AlphaBeta ab;
  ab.alpha = 0.5 * (k1 + k2);
  ab.beta = std::abs(sf.mu) > tol ? (k1 - k2) / (2.0 * sf.mu) : 0.0;

  const ContactTensors ct = contact_tensors(sf.mu);
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double eta_i = ct.eta(i);
      const double eta_j = ct.eta(j);
      for (int l = 0; l < 3; ++l) {
        const double expected = ab.alpha * (eta_j * id(l, i) - eta_i * id(l, j)) +
                                ab.beta * (eta_j * ct.h(l, i) - eta_i * ct.h(l, j));
        if (!(std::abs(curv(i, j, kXi, l) - expected) <= tol)) return std::nullopt;
      }
    }
  }
  return ab;
}

double eta_parallel_residual(const StructureFunctions& sf, const MuDerivatives& dmu) {
  const FrameConnection conn = connection_from_structure(sf);
  const Eigen::Matrix3d h = contact_tensors(sf.mu).h;
  const std::array<double, 2> x_mu{dmu.e1_mu, dmu.e2_mu};

  // g((nabla_x h) e_j, e_l) = x(h_lj) + sum_m h_mj G[x][m][l] - sum_m h_lm G[x][j][m]
  double worst = 0.0;
  for (int x = 0; x < 2; ++x) {
    const Eigen::Matrix3d dh = Eigen::Vector3d(x_mu[x], -x_mu[x], 0.0).asDiagonal();
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) {
        double s = dh(l, j);
        for (int m = 0; m < 3; ++m) {
          s += h(m, j) * conn(x, m, l);
          s -= h(l, m) * conn(x, j, m);
        }
        worst = std::max(worst, std::abs(s));
      }
    }
  }
  return worst;
}

}  // namespace contact3
