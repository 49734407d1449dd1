#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "contact3/finite_difference.hpp"
#include "contact3/frame_geometry.hpp"
#include "contact3/model_spaces.hpp"
#include "contact3/soliton_solver.hpp"

namespace contact3 {

/// Default pass thresholds.
inline constexpr double kOriginTolerance = 1e-10;
inline constexpr double kAxisTolerance = 1e-9;
inline constexpr double kChartTolerance = 1e-5;

struct ResidualEntry {
  std::string name;
  double value{};  // magnitude, max over checked points
};

struct ResidualReport {
  std::string name;
  std::vector<ResidualEntry> entries;
  double max_residual{0.0};
  std::size_t points_checked{0};
  double tolerance{0.0};
  bool pass{false};

  ResidualReport() = default;
  ResidualReport(std::string report_name, double tol);

  /// Keeps the running max per label. NaN counts as an infinite residual.
  void record(std::string_view label, double magnitude);
  [[nodiscard]] double value(std::string_view label) const;
};

/// df[i][j] = e_i(f_{j+1}) for frame directions i = e1, e2, xi.
using FrameDerivatives = std::array<std::array<double, 2>, 3>;

/// Signed frame components of 1/2 (g(nabla_X v, Y) + g(nabla_Y v, X)) + Ric(X, Y) - lambda g(X, Y)
/// for v = f1 e1 + f2 e2.
Eigen::Matrix3d soliton_frame_components(const StructureFunctions& sf, const RicciMatrix& ric,
                                         const std::array<double, 2>& f,
                                         const FrameDerivatives& df, double lambda);

/// The six independent components above as a report, labeled "(xi,xi)", "(e1,e1)",
/// "(e2,e2)", "(xi,e1)", "(xi,e2)", "(e1,e2)".
ResidualReport soliton_frame_residual(const StructureFunctions& sf, const RicciMatrix& ric,
                                      const std::array<double, 2>& f, const FrameDerivatives& df,
                                      double lambda, double tol = kAxisTolerance);

/// Signed residuals of the first-order system, frame derivatives taken as the
/// coordinate partials of the sample:
///   [0] e1(f1) - delta1, [1] e2(f2) - delta2, [2] e1(f2) + e2(f1),
///   [3] xi(f1) + delta3 f2, [4] xi(f2) + delta4 f1.
std::array<double, 5> system_residuals(const SolitonParams& params, const PotentialSample& s);

inline constexpr std::array<std::string_view, 5> kSystemLabels = {
    "e1(f1)-delta1", "e2(f2)-delta2", "e1(f2)+e2(f1)", "xi(f1)+delta3*f2", "xi(f2)+delta4*f1"};

/// All five equations at the base point. Throws std::invalid_argument when
/// the field family does not belong to the model.
ResidualReport origin_residual(const PotentialField& pf, const SolitonParams& params,
                               double tol = kOriginTolerance);
ResidualReport origin_residual(const PotentialField& pf, const SasakianModel& model,
                               double tol = kOriginTolerance);

/// Both xi-equations and d^2 f/dt^2 - delta f = 0 along u1 = u2 = 0.
ResidualReport axis_residual(const PotentialField& pf, const SolitonParams& params,
                             std::span<const double> t_grid, double tol = kAxisTolerance);
ResidualReport axis_residual(const PotentialField& pf, const SasakianModel& model,
                             std::span<const double> t_grid, double tol = kAxisTolerance);

/// n equally spaced points on [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

using VectorField = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

struct LieDerivative {
  Eigen::Matrix3d value;
  /// max |value(step) - value(step/2)|.
  double step_gap{};
  bool unstable{};
};

/// (L_v g)_ab = v^c d_c g_ab + g_cb d_a v^c + g_ac d_b v^c by finite differences.
LieDerivative lie_derivative_fd(const ChartMetric& chart, const VectorField& v,
                                const Eigen::Vector3d& p, const FDConfig& cfg);

Christoffel christoffel_fd(const ChartMetric& chart, const Eigen::Vector3d& p, const FDConfig& cfg);

/// Coordinate components of the Ricci tensor from differentiated Christoffel symbols.
Eigen::Matrix3d ricci_fd(const ChartMetric& chart, const Eigen::Vector3d& p, const FDConfig& cfg);

/// Connection of the chart's frame, gamma[i][j][k] = e_k-component of nabla_{e_i} e_j.
FrameConnection frame_connection_fd(const ChartMetric& chart, const Eigen::Vector3d& p,
                                    const FDConfig& cfg);

/// E^T M E with the chart frame E at p.
Eigen::Matrix3d to_frame(const ChartMetric& chart, const Eigen::Vector3d& p, const Eigen::Matrix3d& m);

/// Which coordinates the potential field's (u1, u2, t) refer to.
enum class FieldCoordinates {
  Normal,  ///< Riemannian normal coordinates at the chart origin (chart.to_normal)
  Chart,   ///< the chart's own coordinates
};

/// v = f1 e1 + f2 e2 as a coordinate vector field on the chart.
VectorField potential_vector_field(const ChartMetric& chart, const PotentialField& pf,
                                   FieldCoordinates coords);

struct ChartResidual {
  ResidualReport report;      // frame components, same labels as soliton_frame_residual
  Eigen::Matrix3d coordinate; // 1/2 L_v g + Ric - lambda g in chart coordinates
  Eigen::Matrix3d frame;      // the same tensor in the frame (e1, e2, xi)
  bool fd_unstable{};
};

ChartResidual chart_soliton_residual(const ChartMetric& chart, const VectorField& v, double lambda,
                                     const Eigen::Vector3d& p, const FDConfig& cfg,
                                     double tol = kChartTolerance);

ChartResidual chart_soliton_residual(const ChartMetric& chart, const PotentialField& pf,
                                     double lambda, const Eigen::Vector3d& p, const FDConfig& cfg,
                                     FieldCoordinates coords = FieldCoordinates::Normal,
                                     double tol = kChartTolerance);

}  // namespace contact3
