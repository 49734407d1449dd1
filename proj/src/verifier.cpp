#include "contact3/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace contact3 {

namespace {

constexpr std::array<std::pair<int, int>, 6> kComponents = {{
    {kXi, kXi}, {kE1, kE1}, {kE2, kE2}, {kXi, kE1}, {kXi, kE2}, {kE1, kE2}}};
constexpr std::array<std::string_view, 6> kComponentLabels = {
    "(xi,xi)", "(e1,e1)", "(e2,e2)", "(xi,e1)", "(xi,e2)", "(e1,e2)"};

void record_components(ResidualReport& report, const Eigen::Matrix3d& m) {
  for (std::size_t n = 0; n < kComponents.size(); ++n) {
    const auto [i, j] = kComponents[n];
    report.record(kComponentLabels[n], std::abs(m(i, j)));
  }
}

void require_nonsasakian_family(const PotentialField& pf, const SolitonParams& params) {
  if (pf.family != FieldFamily::NonSasakian && pf.family != FieldFamily::FlatSpecial) {
    throw std::invalid_argument("potential field is not a non-Sasakian family");
  }
  if (pf.case_tag != params.case_tag) {
    throw std::invalid_argument("potential field case does not match the soliton parameters");
  }
}

void require_sasakian_family(const PotentialField& pf, const SasakianModel& model) {
  if (pf.family != FieldFamily::Sasakian && pf.family != FieldFamily::SphereSpecial) {
    throw std::invalid_argument("potential field is not a Sasakian family");
  }
  if (std::abs(pf.rate - std::abs(model.c1 - 2.0)) > kDispatchZero) {
    throw std::invalid_argument("potential field rate does not match c1");
  }
}

}  // namespace

ResidualReport::ResidualReport(std::string report_name, double tol)
    : name(std::move(report_name)), tolerance(tol), pass(max_residual < tol) {}

void ResidualReport::record(std::string_view label, double magnitude) {
  if (std::isnan(magnitude)) magnitude = std::numeric_limits<double>::infinity();
  magnitude = std::abs(magnitude);
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ResidualEntry& e) { return e.name == label; });
  if (it == entries.end()) {
    entries.push_back({std::string(label), magnitude});
  } else {
    it->value = std::max(it->value, magnitude);
  }
  max_residual = std::max(max_residual, magnitude);
  pass = max_residual < tolerance;
}

double ResidualReport::value(std::string_view label) const {
  for (const auto& e : entries) {
    if (e.name == label) return e.value;
  }
  throw std::out_of_range("no residual labeled " + std::string(label));
}

Eigen::Matrix3d soliton_frame_components(const StructureFunctions& sf, const RicciMatrix& ric,
                                         const std::array<double, 2>& f,
                                         const FrameDerivatives& df, double lambda) {
  const FrameConnection conn = connection_from_structure(sf);
  // A(x, y) = g(nabla_{e_x} v, e_y) = e_x(f_y) + sum_j f_j gamma[x][j][y]; f_3 = 0.
  Eigen::Matrix3d A = Eigen::Matrix3d::Zero();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      double s = y < 2 ? df[x][y] : 0.0;
      for (int j = 0; j < 2; ++j) s += f[j] * conn(x, j, y);
      A(x, y) = s;
    }
  }
  return 0.5 * (A + A.transpose()) + ric.matrix() - lambda * Eigen::Matrix3d::Identity();
}

ResidualReport soliton_frame_residual(const StructureFunctions& sf, const RicciMatrix& ric,
                                      const std::array<double, 2>& f, const FrameDerivatives& df,
                                      double lambda, double tol) {
  ResidualReport report("soliton_frame", tol);
  record_components(report, soliton_frame_components(sf, ric, f, df, lambda));
  report.points_checked = 1;
  return report;
}

std::array<double, 5> system_residuals(const SolitonParams& params, const PotentialSample& s) {
  const auto& g1 = s.grad[0];
  const auto& g2 = s.grad[1];
  return {
      g1[0] - params.delta1,
      g2[1] - params.delta2,
      g2[0] + g1[1],
      g1[2] + params.delta3 * s.f[1],
      g2[2] + params.delta4 * s.f[0],
  };
}

ResidualReport origin_residual(const PotentialField& pf, const SolitonParams& params, double tol) {
  require_nonsasakian_family(pf, params);
  ResidualReport report("origin", tol);
  const auto r = system_residuals(params, evaluate_potential(pf, {0.0, 0.0, 0.0}));
  for (std::size_t k = 0; k < r.size(); ++k) report.record(kSystemLabels[k], r[k]);
  report.points_checked = 1;
  return report;
}

ResidualReport origin_residual(const PotentialField& pf, const SasakianModel& model, double tol) {
  require_sasakian_family(pf, model);
  const SolitonParams params = sasakian_params(model.c1);
  ResidualReport report("origin", tol);
  const auto r = system_residuals(params, evaluate_potential(pf, {0.0, 0.0, 0.0}));
  for (std::size_t k = 0; k < r.size(); ++k) report.record(kSystemLabels[k], r[k]);
  report.points_checked = 1;
  return report;
}

namespace {

ResidualReport axis_report(const PotentialField& pf, const SolitonParams& params,
                           std::span<const double> t_grid, double tol) {
  ResidualReport report("axis", tol);
  for (double t : t_grid) {
    if (!std::isfinite(t)) throw std::invalid_argument("axis grid must be finite");
    const PotentialSample s = evaluate_potential(pf, {0.0, 0.0, t});
    const auto r = system_residuals(params, s);
    report.record(kSystemLabels[3], r[3]);
    report.record(kSystemLabels[4], r[4]);
    report.record("d2f1/dt2-delta*f1", s.d2t[0] - params.delta * s.f[0]);
    report.record("d2f2/dt2-delta*f2", s.d2t[1] - params.delta * s.f[1]);
    ++report.points_checked;
  }
  return report;
}

}  // namespace

ResidualReport axis_residual(const PotentialField& pf, const SolitonParams& params,
                             std::span<const double> t_grid, double tol) {
  require_nonsasakian_family(pf, params);
  return axis_report(pf, params, t_grid, tol);
}

ResidualReport axis_residual(const PotentialField& pf, const SasakianModel& model,
                             std::span<const double> t_grid, double tol) {
  require_sasakian_family(pf, model);
  return axis_report(pf, sasakian_params(model.c1), t_grid, tol);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  if (n == 1) return {lo};
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

namespace {

Eigen::Matrix3d lie_derivative_at_step(const ChartMetric& chart, const VectorField& v,
                                       const Eigen::Vector3d& p, double h, FDScheme scheme) {
  const Eigen::Matrix3d g = chart.metric(p);
  const Eigen::Vector3d vp = v(p);
  Eigen::Matrix3d dv;  // dv(c, a) = d_a v^c
  Eigen::Matrix3d transport = Eigen::Matrix3d::Zero();
  for (int c = 0; c < 3; ++c) {
    dv.col(c) = partial(v, p, c, h, scheme);
    transport += vp(c) * partial(chart.metric, p, c, h, scheme);
  }
  const Eigen::Matrix3d out = transport + dv.transpose() * g + g * dv;
  return 0.5 * (out + out.transpose());
}

using FlatChristoffel = Eigen::Matrix<double, 27, 1>;

FlatChristoffel flatten(const Christoffel& gamma) {
  FlatChristoffel out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) out(9 * a + 3 * b + c) = gamma[a](b, c);
    }
  }
  return out;
}

}  // namespace

LieDerivative lie_derivative_fd(const ChartMetric& chart, const VectorField& v,
                                const Eigen::Vector3d& p, const FDConfig& cfg) {
  cfg.validate();
  LieDerivative out;
  out.value = lie_derivative_at_step(chart, v, p, cfg.step, cfg.scheme);
  const Eigen::Matrix3d half = lie_derivative_at_step(chart, v, p, 0.5 * cfg.step, cfg.scheme);
  out.step_gap = (out.value - half).cwiseAbs().maxCoeff();
  out.unstable = !(out.step_gap <= cfg.tolerance);
  return out;
}

Christoffel christoffel_fd(const ChartMetric& chart, const Eigen::Vector3d& p, const FDConfig& cfg) {
  cfg.validate();
  const Eigen::Matrix3d ginv = chart.metric(p).inverse();
  std::array<Eigen::Matrix3d, 3> dg;
  for (int c = 0; c < 3; ++c) dg[c] = partial(chart.metric, p, c, cfg.step, cfg.scheme);

  Christoffel gamma;
  for (int a = 0; a < 3; ++a) {
    gamma[a].setZero();
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int d = 0; d < 3; ++d) {
          s += ginv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        }
        gamma[a](b, c) = 0.5 * s;
      }
    }
  }
  return gamma;
}

Eigen::Matrix3d ricci_fd(const ChartMetric& chart, const Eigen::Vector3d& p, const FDConfig& cfg) {
  const Christoffel gamma = christoffel_fd(chart, p, cfg);
  auto flat = [&](const Eigen::Vector3d& q) { return flatten(christoffel_fd(chart, q, cfg)); };
  std::array<FlatChristoffel, 3> dgamma;  // dgamma[e](9a + 3b + c) = d_e Gamma^a_bc
  for (int e = 0; e < 3; ++e) dgamma[e] = partial(flat, p, e, cfg.outer_step, cfg.scheme);

  // Ric_bd = d_a G^a_db - d_d G^a_ab + G^a_ae G^e_db - G^a_de G^e_ab
  Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
  for (int b = 0; b < 3; ++b) {
    for (int d = 0; d < 3; ++d) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) {
        s += dgamma[a](9 * a + 3 * d + b) - dgamma[d](9 * a + 3 * a + b);
        for (int e = 0; e < 3; ++e) {
          s += gamma[a](a, e) * gamma[e](d, b) - gamma[a](d, e) * gamma[e](a, b);
        }
      }
      ric(b, d) = s;
    }
  }
  return 0.5 * (ric + ric.transpose());
}

FrameConnection frame_connection_fd(const ChartMetric& chart, const Eigen::Vector3d& p,
                                    const FDConfig& cfg) {
  const Christoffel gamma = christoffel_fd(chart, p, cfg);
  const Eigen::Matrix3d E = chart.frame(p);
  const Eigen::Matrix3d Einv = E.inverse();
  std::array<Eigen::Matrix3d, 3> dE;
  for (int b = 0; b < 3; ++b) dE[b] = partial(chart.frame, p, b, cfg.step, cfg.scheme);

  FrameConnection conn;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // nabla_{e_i} e_j = e_i^b (d_b e_j + Gamma_b e_j)
      Eigen::Vector3d cov = Eigen::Vector3d::Zero();
      for (int b = 0; b < 3; ++b) {
        Eigen::Vector3d term = dE[b].col(j);
        for (int a = 0; a < 3; ++a) term(a) += gamma[a].row(b).dot(E.col(j));
        cov += E(b, i) * term;
      }
      const Eigen::Vector3d comps = Einv * cov;
      for (int k = 0; k < 3; ++k) conn.gamma[i][j][k] = comps(k);
    }
  }
  return conn;
}

Eigen::Matrix3d to_frame(const ChartMetric& chart, const Eigen::Vector3d& p, const Eigen::Matrix3d& m) {
  const Eigen::Matrix3d E = chart.frame(p);
  return E.transpose() * m * E;
}

VectorField potential_vector_field(const ChartMetric& chart, const PotentialField& pf,
                                   FieldCoordinates coords) {
  if (coords == FieldCoordinates::Normal && !chart.to_normal) {
    throw std::invalid_argument("chart has no normal coordinates");
  }
  return [chart, pf, coords](const Eigen::Vector3d& q) -> Eigen::Vector3d {
    const Eigen::Vector3d x = coords == FieldCoordinates::Normal ? chart.to_normal(q) : q;
    const PotentialSample s = evaluate_potential(pf, {x(0), x(1), x(2)});
    const Eigen::Matrix3d E = chart.frame(q);
    return s.f[0] * E.col(kE1) + s.f[1] * E.col(kE2);
  };
}

ChartResidual chart_soliton_residual(const ChartMetric& chart, const VectorField& v, double lambda,
                                     const Eigen::Vector3d& p, const FDConfig& cfg, double tol) {
  const LieDerivative lie = lie_derivative_fd(chart, v, p, cfg);
  const Eigen::Matrix3d ric = ricci_fd(chart, p, cfg);
  ChartResidual out;
  out.coordinate = 0.5 * lie.value + ric - lambda * chart.metric(p);
  out.frame = to_frame(chart, p, out.coordinate);
  out.fd_unstable = lie.unstable;
  out.report = ResidualReport("chart_soliton", tol);
  record_components(out.report, out.frame);
  out.report.points_checked = 1;
  return out;
}

ChartResidual chart_soliton_residual(const ChartMetric& chart, const PotentialField& pf,
                                     double lambda, const Eigen::Vector3d& p, const FDConfig& cfg,
                                     FieldCoordinates coords, double tol) {
  return chart_soliton_residual(chart, potential_vector_field(chart, pf, coords), lambda, p, cfg,
                                tol);
}

}  // namespace contact3
