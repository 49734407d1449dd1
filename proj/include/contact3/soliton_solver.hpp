#pragma once

#include <string>

#include "contact3/model_spaces.hpp"

namespace contact3 {

/// Sign of delta = delta3 * delta4: I (> 0), II (< 0), III (= 0).
enum class SolitonCase { I, II, III };
enum class SolitonType { Shrinking, Steady, Expanding };
enum class FieldFamily { NonSasakian, Sasakian, SphereSpecial, FlatSpecial };

std::string to_string(SolitonCase c);
std::string to_string(SolitonType t);
std::string to_string(FieldFamily f);

/// Values below this magnitude count as zero for case and type dispatch.
inline constexpr double kDispatchZero = 1e-12;

/// Soliton constant and the coefficients of the first-order system
///   e1(f2) + e2(f1) = 0, e1(f1) = delta1, e2(f2) = delta2,
///   xi(f1) + delta3 f2 = 0, xi(f2) + delta4 f1 = 0.
/// The Sasakian system has the same shape with delta1 = delta2 = 4 - 2 c1,
/// delta3 = 2 - c1 and delta4 = c1 - 2.
struct SolitonParams {
  double lambda{};
  double delta1{};
  double delta2{};
  double delta3{};
  double delta4{};
  double delta{};
  SolitonCase case_tag{SolitonCase::III};
  SolitonType soliton_type{SolitonType::Steady};
};

double soliton_constant(const SasakianModel& m);
double soliton_constant(const NonSasakianModel& m);

SolitonType soliton_type_of(double lambda);
SolitonCase case_of(double delta);

/// Throws std::invalid_argument for mu <= 0.
SolitonParams delta_coefficients(double mu, double beta);

/// Same system for the Sasakian model; lambda = 2.
SolitonParams sasakian_params(double c1);

/// coef_u1 * u1 + coef_u2 * u2 + constant.
struct AffineForm {
  double coef_u1{};
  double coef_u2{};
  double constant{};

  [[nodiscard]] double operator()(double u1, double u2) const {
    return coef_u1 * u1 + coef_u2 * u2 + constant;
  }
};

/// f_i(u1, u2, t) = A_i(u1, u2) p(t) + B_i(u1, u2) q(t) with
///   case I:   p = exp(rate t), q = exp(-rate t)
///   case II:  p = cos(rate t), q = sin(rate t)
///   case III: p = 1,           q = t
/// in normal coordinates (u1, u2, t) at the base point.
struct PotentialField {
  FieldFamily family{FieldFamily::NonSasakian};
  SolitonCase case_tag{SolitonCase::III};
  double rate{};
  AffineForm A1;
  AffineForm B1;
  AffineForm A2;
  AffineForm B2;
  double C{};
  double D{};
};

struct ChartPoint {
  double u1{};
  double u2{};
  double t{};
};

/// Values and closed-form partials. grad[i] = (d/du1, d/du2, d/dt) of f_{i+1}.
struct PotentialSample {
  std::array<double, 2> f{};
  std::array<std::array<double, 3>, 2> grad{};
  std::array<double, 2> d2t{};
};

/// Closed-form family for the non-Sasakian (alpha, beta)-model. Throws
/// std::invalid_argument for mu <= 0.
PotentialField solve_potential(double mu, double beta, double C, double D);

/// Family for an explicit coefficient set. Both square-root branches of
/// cases I and II are selected by the sign pattern of (delta3, delta4);
/// throws std::logic_error when the pattern does not fit the case.
PotentialField solve_potential(const SolitonParams& params, double C, double D);

/// Cosine/sine family of the Sasakian model; c1 = 2 gives the constant field
/// f1 = C, f2 = D.
PotentialField solve_sasakian_potential(double c1, double C, double D);

PotentialSample evaluate_potential(const PotentialField& pf, const ChartPoint& p);

/// False when (f1, f2) sampled on a grid are proportional as functions
/// (including either one vanishing).
bool pointwise_independent(const PotentialField& pf);

}  // namespace contact3
