#include "contact3/model_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace contact3 {

namespace {
constexpr double kZero = 1e-12;
}

NonSasakianModel::NonSasakianModel(double mu, double beta) : mu_(mu), beta_(beta) {
  if (!std::isfinite(mu) || !std::isfinite(beta)) {
    throw std::invalid_argument("non-Sasakian model: mu and beta must be finite");
  }
  if (!(mu > 0.0)) {
    throw std::invalid_argument("non-Sasakian model requires mu > 0 (mu = 0 is the Sasakian locus)");
  }
}

StructureFunctions NonSasakianModel::structure() const {
  return StructureFunctions{-0.5 * beta_, 0.0, 0.0, mu_};
}

SasakianData sasakian_model(double c1) {
  SasakianData d;
  d.structure = StructureFunctions{c1 - 1.0, 0.0, 0.0, 0.0};
  d.connection = connection_from_structure(d.structure);
  d.ricci = RicciMatrix::diagonal(2.0 * c1 - 2.0, 2.0 * c1 - 2.0, 2.0);
  d.tensors = contact_tensors(0.0);
  return d;
}

NonSasakianData nonsasakian_model(double mu, double beta) {
  const NonSasakianModel m(mu, beta);
  return NonSasakianData{
      m.structure(),
      RicciMatrix::diagonal(-beta + beta * mu, -beta - beta * mu, 2.0 * m.alpha()),
  };
}

ContactMetricStructure frame_contact_structure() {
  const ContactTensors t = contact_tensors(0.0);
  ContactMetricStructure s;
  s.eta = t.eta;
  s.xi = t.xi;
  s.phi = t.phi;
  s.g = Eigen::Matrix3d::Identity();
  s.deta = s.g * s.phi;
  return s;
}

ContactMetricStructure d_homothetic(const ContactMetricStructure& s, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("D-homothetic deformation requires eps > 0");
  }
  ContactMetricStructure out;
  out.eta = eps * s.eta;
  out.xi = s.xi / eps;
  out.phi = s.phi;
  out.g = eps * s.g + eps * (eps - 1.0) * (s.eta * s.eta.transpose());
  out.deta = eps * s.deta;
  return out;
}

double contact_compatibility_defect(const ContactMetricStructure& s) {
  double worst = std::abs(s.eta.dot(s.xi) - 1.0);
  worst = std::max(worst, (s.g * s.xi - s.eta).cwiseAbs().maxCoeff());
  const Eigen::Matrix3d phi2 = s.phi * s.phi;
  const Eigen::Matrix3d target = -Eigen::Matrix3d::Identity() + s.xi * s.eta.transpose();
  worst = std::max(worst, (phi2 - target).cwiseAbs().maxCoeff());
  worst = std::max(worst, (s.g * s.phi - s.deta).cwiseAbs().maxCoeff());
  return worst;
}

std::string to_string(LieGroup g) {
  switch (g) {
    case LieGroup::SU2: return "SU2";
    case LieGroup::SL2R: return "SL2R";
    case LieGroup::E2: return "E2";
    case LieGroup::E11: return "E11";
    case LieGroup::Nil: return "NIL";
  }
  return "?";
}

std::string to_string(const GroupTag& tag) {
  if (tag.unit_sphere) return "UNIT_SPHERE";
  if (tag.unique()) return to_string(tag.candidates.front());
  std::string s = "CANDIDATE_SET(";
  for (std::size_t i = 0; i < tag.candidates.size(); ++i) {
    if (i != 0) s += ",";
    s += to_string(tag.candidates[i]);
  }
  return s + ")";
}

GroupTag classify_group(const SasakianModel& m) {
  if (std::abs(m.c1) < kZero) return GroupTag{{LieGroup::Nil}};
  if (m.c1 < 0.0) return GroupTag{{LieGroup::SL2R}};
  return GroupTag{{LieGroup::SU2}, std::abs(m.c1 - 2.0) < kZero};
}

GroupTag classify_group(const NonSasakianModel& m) {
  if (std::abs(m.beta()) >= kZero) {
    return GroupTag{{LieGroup::SU2, LieGroup::SL2R, LieGroup::E2, LieGroup::E11}};
  }
  if (std::abs(m.mu() - 1.0) < kZero) return GroupTag{{LieGroup::E2}};
  if (m.mu() < 1.0) return GroupTag{{LieGroup::SU2}};
  return GroupTag{{LieGroup::SL2R}};
}

ChartMetric flat_chart() {
  ChartMetric c;
  c.metric = [](const Eigen::Vector3d&) -> Eigen::Matrix3d { return Eigen::Matrix3d::Identity(); };
  c.frame = [](const Eigen::Vector3d&) -> Eigen::Matrix3d { return Eigen::Matrix3d::Identity(); };
  c.eta = [](const Eigen::Vector3d&) -> Eigen::Vector3d { return Eigen::Vector3d::UnitZ(); };
  c.to_normal = [](const Eigen::Vector3d& p) -> Eigen::Vector3d { return p; };
  return c;
}

ChartMetric heisenberg_chart() {
  ChartMetric c;
  c.eta = [](const Eigen::Vector3d& p) -> Eigen::Vector3d {
    return Eigen::Vector3d(-0.5 * p(1), 0.0, 0.5);
  };
  c.metric = [eta = c.eta](const Eigen::Vector3d& p) -> Eigen::Matrix3d {
    const Eigen::Vector3d e = eta(p);
    Eigen::Matrix3d g = e * e.transpose();
    g(0, 0) += 0.25;
    g(1, 1) += 0.25;
    return g;
  };
  c.frame = [](const Eigen::Vector3d& p) -> Eigen::Matrix3d {
    Eigen::Matrix3d f;
    f << 2.0, 0.0, 0.0,
         0.0, -2.0, 0.0,
         2.0 * p(1), 0.0, 2.0;
    return f;
  };
  c.to_normal = [](const Eigen::Vector3d& q) -> Eigen::Vector3d { return heisenberg_log(q); };
  return c;
}

}  // namespace contact3
