#include "contact3/soliton_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace contact3 {

std::string to_string(SolitonCase c) {
  switch (c) {
    case SolitonCase::I: return "I";
    case SolitonCase::II: return "II";
    case SolitonCase::III: return "III";
  }
  return "?";
}

std::string to_string(SolitonType t) {
  switch (t) {
    case SolitonType::Shrinking: return "shrinking";
    case SolitonType::Steady: return "steady";
    case SolitonType::Expanding: return "expanding";
  }
  return "?";
}

std::string to_string(FieldFamily f) {
  switch (f) {
    case FieldFamily::NonSasakian: return "NONSASAKIAN";
    case FieldFamily::Sasakian: return "SASAKIAN";
    case FieldFamily::SphereSpecial: return "SPHERE_SPECIAL";
    case FieldFamily::FlatSpecial: return "FLAT_SPECIAL";
  }
  return "?";
}

double soliton_constant(const SasakianModel&) { return 2.0; }

double soliton_constant(const NonSasakianModel& m) { return 2.0 - 2.0 * m.mu() * m.mu(); }

SolitonType soliton_type_of(double lambda) {
  if (std::abs(lambda) < kDispatchZero) return SolitonType::Steady;
  return lambda > 0.0 ? SolitonType::Shrinking : SolitonType::Expanding;
}

SolitonCase case_of(double delta) {
  if (std::abs(delta) < kDispatchZero) return SolitonCase::III;
  return delta > 0.0 ? SolitonCase::I : SolitonCase::II;
}

SolitonParams delta_coefficients(double mu, double beta) {
  const NonSasakianModel m(mu, beta);
  SolitonParams p;
  p.lambda = soliton_constant(m);
  p.delta1 = beta - beta * mu + 2.0 - 2.0 * mu * mu;
  p.delta2 = beta + beta * mu + 2.0 - 2.0 * mu * mu;
  p.delta3 = beta / 2.0 + 1.0 + mu;
  p.delta4 = -beta / 2.0 + mu - 1.0;
  p.delta = p.delta3 * p.delta4;
  p.case_tag = case_of(p.delta);
  p.soliton_type = soliton_type_of(p.lambda);
  return p;
}

SolitonParams sasakian_params(double c1) {
  SolitonParams p;
  p.lambda = soliton_constant(SasakianModel{c1});
  p.delta1 = 4.0 - 2.0 * c1;
  p.delta2 = 4.0 - 2.0 * c1;
  p.delta3 = 2.0 - c1;
  p.delta4 = c1 - 2.0;
  p.delta = p.delta3 * p.delta4;
  p.case_tag = case_of(p.delta);
  p.soliton_type = soliton_type_of(p.lambda);
  return p;
}

PotentialField solve_potential(const SolitonParams& params, double C, double D) {
  const double d1 = params.delta1;
  const double d2 = params.delta2;
  const double d3 = params.delta3;
  const double d4 = params.delta4;

  PotentialField pf;
  pf.family = FieldFamily::NonSasakian;
  pf.case_tag = params.case_tag;
  pf.C = C;
  pf.D = D;

  switch (params.case_tag) {
    case SolitonCase::I: {
      pf.rate = std::sqrt(params.delta);
      pf.A1 = {d1 / 2.0, d1 / 2.0, 0.0};
      pf.B1 = {d1 / 2.0, d1 / 2.0, 0.0};
      pf.A2 = {-d1 / 2.0, d2 / 2.0, 0.0};
      pf.B2 = {-d1 / 2.0, d2 / 2.0, 0.0};
      const double s3 = std::sqrt(std::abs(d3));
      const double s4 = std::sqrt(std::abs(d4));
      if (d3 > 0.0 && d4 > 0.0) {
        pf.A1.constant = -s3 * C;
        pf.B1.constant = s3 * D;
        pf.A2.constant = s4 * C;
        pf.B2.constant = s4 * D;
      } else if (d3 < 0.0 && d4 < 0.0) {
        pf.A1.constant = s3 * C;
        pf.B1.constant = -s3 * D;
        pf.A2.constant = s4 * C;
        pf.B2.constant = s4 * D;
      } else {
        throw std::logic_error("case I requires delta3 and delta4 of equal sign");
      }
      break;
    }
    case SolitonCase::II: {
      pf.rate = std::sqrt(-params.delta);
      pf.A1 = {d1, d1, 0.0};
      pf.B1 = {d1, d1, 0.0};
      pf.A2 = {-d1, d2, 0.0};
      pf.B2 = {-d1, d2, 0.0};
      const double s3 = std::sqrt(std::abs(d3));
      const double s4 = std::sqrt(std::abs(d4));
      if (d3 > 0.0 && d4 < 0.0) {
        pf.A1.constant = -s3 * C;
        pf.B1.constant = s3 * D;
        pf.A2.constant = -s4 * D;
        pf.B2.constant = -s4 * C;
      } else if (d3 < 0.0 && d4 > 0.0) {
        pf.A1.constant = s3 * C;
        pf.B1.constant = s3 * D;
        pf.A2.constant = s4 * D;
        pf.B2.constant = -s4 * C;
      } else {
        throw std::logic_error("case II requires delta3 and delta4 of opposite sign");
      }
      break;
    }
    case SolitonCase::III: {
      pf.rate = 0.0;
      pf.A1 = {d1, 0.0, C};
      pf.A2 = {0.0, d2, D};
      pf.B1 = {0.0, 0.0, -d3 * D};
      pf.B2 = {0.0, 0.0, -d4 * C};
      break;
    }
  }
  return pf;
}

PotentialField solve_potential(double mu, double beta, double C, double D) {
  PotentialField pf = solve_potential(delta_coefficients(mu, beta), C, D);
  if (std::abs(mu - 1.0) < kDispatchZero && std::abs(beta) < kDispatchZero) {
    pf.family = FieldFamily::FlatSpecial;
  }
  return pf;
}

PotentialField solve_sasakian_potential(double c1, double C, double D) {
  PotentialField pf;
  pf.C = C;
  pf.D = D;
  if (std::abs(c1 - 2.0) < kDispatchZero) {
    pf.family = FieldFamily::SphereSpecial;
    pf.case_tag = SolitonCase::III;
    pf.rate = 0.0;
    pf.A1 = {0.0, 0.0, C};
    pf.A2 = {0.0, 0.0, D};
    return pf;
  }
  const double k = 4.0 - 2.0 * c1;
  pf.family = FieldFamily::Sasakian;
  pf.case_tag = SolitonCase::II;
  pf.rate = std::abs(c1 - 2.0);
  if (c1 > 2.0) {
    pf.A1 = {k, k, -D};
    pf.A2 = {-k, k, C};
    pf.B1 = {k, k, C};
    pf.B2 = {-k, k, D};
  } else {
    pf.A1 = {k, k, -D};
    pf.A2 = {-k, k, -C};
    pf.B1 = {k, k, C};
    pf.B2 = {-k, k, -D};
  }
  return pf;
}

PotentialSample evaluate_potential(const PotentialField& pf, const ChartPoint& p) {
  // Time profiles p(t), q(t) with first and second derivatives.
  double P = 1.0, dP = 0.0, ddP = 0.0;
  double Q = p.t, dQ = 1.0, ddQ = 0.0;
  const double r = pf.rate;
  switch (pf.case_tag) {
    case SolitonCase::I: {
      const double ep = std::exp(r * p.t);
      const double em = std::exp(-r * p.t);
      P = ep; dP = r * ep; ddP = r * r * ep;
      Q = em; dQ = -r * em; ddQ = r * r * em;
      break;
    }
    case SolitonCase::II: {
      const double c = std::cos(r * p.t);
      const double s = std::sin(r * p.t);
      P = c; dP = -r * s; ddP = -r * r * c;
      Q = s; dQ = r * c; ddQ = -r * r * s;
      break;
    }
    case SolitonCase::III:
      break;
  }

  PotentialSample out;
  const AffineForm* A[2] = {&pf.A1, &pf.A2};
  const AffineForm* B[2] = {&pf.B1, &pf.B2};
  for (int i = 0; i < 2; ++i) {
    const double a = (*A[i])(p.u1, p.u2);
    const double b = (*B[i])(p.u1, p.u2);
    out.f[i] = a * P + b * Q;
    out.grad[i][0] = A[i]->coef_u1 * P + B[i]->coef_u1 * Q;
    out.grad[i][1] = A[i]->coef_u2 * P + B[i]->coef_u2 * Q;
    out.grad[i][2] = a * dP + b * dQ;
    out.d2t[i] = a * ddP + b * ddQ;
  }
  return out;
}

bool pointwise_independent(const PotentialField& pf) {
  double s11 = 0.0, s22 = 0.0, s12 = 0.0;
  for (double u1 : {-1.0, 0.0, 0.5}) {
    for (double u2 : {-0.5, 0.0, 1.0}) {
      for (double t : {-0.7, 0.0, 0.3, 1.1}) {
        const PotentialSample s = evaluate_potential(pf, {u1, u2, t});
        s11 += s.f[0] * s.f[0];
        s22 += s.f[1] * s.f[1];
        s12 += s.f[0] * s.f[1];
      }
    }
  }
  if (s11 == 0.0 || s22 == 0.0) return false;
  return s11 * s22 - s12 * s12 > 1e-12 * s11 * s22;
}

}  // namespace contact3
