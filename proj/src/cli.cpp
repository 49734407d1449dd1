#include "contact3/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "contact3/report.hpp"

namespace contact3::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> mu;
  double beta{0.0};
  bool sasakian{false};
  std::optional<double> c1;
  double C{1.0};
  double D{0.0};
  std::optional<std::string> point;
  std::optional<int> grid;
  std::optional<double> tol;
  std::optional<double> step;
  bool json{false};
};

void add_common_options(CLI::App* sub, Options& o) {
  sub->add_option("--mu", o.mu, "eigenvalue mu > 0 of h (non-Sasakian model)");
  sub->add_option("--beta", o.beta, "beta of the (alpha, beta)-model")->capture_default_str();
  sub->add_flag("--sasakian", o.sasakian, "use the Sasakian Lie group model");
  sub->add_option("--c1", o.c1, "structure constant c1 of the Sasakian model");
  sub->add_option("--C", o.C, "integration constant C")->capture_default_str();
  sub->add_option("--D", o.D, "integration constant D")->capture_default_str();
  sub->add_option("--point", o.point, "chart point u1,u2,t");
  sub->add_option("--grid", o.grid, "grid size");
  sub->add_option("--tol", o.tol, "pass threshold");
  sub->add_option("--step", o.step, "finite-difference step (default 1e-5)");
  sub->add_flag("--json", o.json, "emit the JSON report");
}

struct Model {
  bool sasakian{false};
  double c1{0.0};
  double mu{0.0};
  double beta{0.0};
};

Model resolve_model(const Options& o) {
  Model m;
  if (o.sasakian) {
    if (!o.c1) throw UsageError("--sasakian requires --c1");
    if (!std::isfinite(*o.c1)) throw UsageError("--c1 must be finite");
    m.sasakian = true;
    m.c1 = *o.c1;
    return m;
  }
  if (o.c1) throw UsageError("--c1 is only valid together with --sasakian");
  if (!o.mu) throw UsageError("either --mu or --sasakian --c1 is required");
  if (!std::isfinite(*o.mu) || !(*o.mu > 0.0)) {
    throw UsageError("--mu must be > 0 for the non-Sasakian model (use --sasakian for mu = 0)");
  }
  if (!std::isfinite(o.beta)) throw UsageError("--beta must be finite");
  m.mu = *o.mu;
  m.beta = o.beta;
  return m;
}

json model_params(const Model& m) {
  if (m.sasakian) return json{{"model", "sasakian"}, {"c1", m.c1}};
  return json{{"model", "nonsasakian"}, {"mu", m.mu}, {"beta", m.beta}};
}

Eigen::Vector3d parse_point(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed --point '" + text + "'; expected u1,u2,t");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw UsageError("malformed --point '" + text + "'; expected u1,u2,t");
    }
    vals.push_back(v);
  }
  if (vals.size() != 3 || (!text.empty() && text.back() == ',')) {
    throw UsageError("malformed --point '" + text + "'; expected u1,u2,t");
  }
  return {vals[0], vals[1], vals[2]};
}

FDConfig fd_config(const Options& o) {
  FDConfig cfg;
  if (o.step) {
    if (!(*o.step > 0.0) || !std::isfinite(*o.step)) throw UsageError("--step must be > 0");
    cfg.step = *o.step;
  }
  return cfg;
}

double tolerance_or(const Options& o, double fallback) {
  if (!o.tol) return fallback;
  if (!(*o.tol > 0.0)) throw UsageError("--tol must be > 0");
  return *o.tol;
}

SolitonParams soliton_of(const Model& m) {
  return m.sasakian ? sasakian_params(m.c1) : delta_coefficients(m.mu, m.beta);
}

GroupTag group_of(const Model& m) {
  return m.sasakian ? classify_group(SasakianModel{m.c1})
                    : classify_group(NonSasakianModel(m.mu, m.beta));
}

PotentialField field_of(const Model& m, const Options& o) {
  return m.sasakian ? solve_sasakian_potential(m.c1, o.C, o.D)
                    : solve_potential(m.mu, m.beta, o.C, o.D);
}

void cmd_classify(const Options& o, RunReport& r) {
  const Model m = resolve_model(o);
  r.params = model_params(m);
  r.soliton = soliton_of(m);
  r.group = group_of(m);
}

void cmd_solve(const Options& o, RunReport& r) {
  const Model m = resolve_model(o);
  r.params = model_params(m);
  r.params["C"] = o.C;
  r.params["D"] = o.D;
  r.soliton = soliton_of(m);
  r.group = group_of(m);
  r.field = field_of(m, o);
}

void cmd_verify(const Options& o, RunReport& r) {
  const Model m = resolve_model(o);
  const int grid = o.grid.value_or(41);
  if (grid < 1) throw UsageError("--grid must be >= 1");
  r.params = model_params(m);
  r.params["C"] = o.C;
  r.params["D"] = o.D;
  r.params["grid"] = grid;
  r.soliton = soliton_of(m);
  r.group = group_of(m);
  r.field = field_of(m, o);

  const double origin_tol = tolerance_or(o, kOriginTolerance);
  const double axis_tol = tolerance_or(o, kAxisTolerance);
  const auto ts = linspace(-2.0, 2.0, static_cast<std::size_t>(grid));

  // The soliton equation itself, assembled from the frame connection at the base point.
  StructureFunctions sf;
  RicciMatrix ric;
  if (m.sasakian) {
    const SasakianData d = sasakian_model(m.c1);
    sf = d.structure;
    ric = d.ricci;
    r.residuals.push_back(origin_residual(*r.field, SasakianModel{m.c1}, origin_tol));
    r.residuals.push_back(axis_residual(*r.field, SasakianModel{m.c1}, ts, axis_tol));
  } else {
    const NonSasakianData d = nonsasakian_model(m.mu, m.beta);
    sf = d.structure;
    ric = d.ricci;
    r.residuals.push_back(origin_residual(*r.field, *r.soliton, origin_tol));
    r.residuals.push_back(axis_residual(*r.field, *r.soliton, ts, axis_tol));
  }
  const PotentialSample s = evaluate_potential(*r.field, {0.0, 0.0, 0.0});
  const FrameDerivatives df = {{{s.grad[0][0], s.grad[1][0]},
                                {s.grad[0][1], s.grad[1][1]},
                                {s.grad[0][2], s.grad[1][2]}}};
  r.residuals.push_back(soliton_frame_residual(sf, ric, s.f, df, r.soliton->lambda, origin_tol));
}

void cmd_curvature(const Options& o, RunReport& r) {
  const Model m = resolve_model(o);
  r.params = model_params(m);
  r.soliton = soliton_of(m);
  r.group = group_of(m);

  StructureFunctions sf;
  RicciMatrix closed;
  if (m.sasakian) {
    const SasakianData d = sasakian_model(m.c1);
    sf = d.structure;
    closed = d.ricci;
  } else {
    const NonSasakianData d = nonsasakian_model(m.mu, m.beta);
    sf = d.structure;
    closed = d.ricci;
  }
  const FrameConnection conn = connection_from_structure(sf);
  const CurvatureTensor curv = curvature_from_connection(conn);
  const Eigen::Matrix3d ric = curv.ricci();

  ResidualReport contraction("ricci_contraction", 1e-12);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      contraction.record("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                         ric(i, j) - closed(i, j));
    }
  }
  contraction.points_checked = 1;
  r.residuals.push_back(contraction);

  json gamma = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) {
      row.push_back(json::array({conn(i, j, 0), conn(i, j, 1), conn(i, j, 2)}));
    }
    gamma.push_back(row);
  }
  r.data["structure"] = json{{"a", sf.a}, {"b", sf.b}, {"c", sf.c}, {"mu", sf.mu}};
  r.data["connection"] = gamma;
  r.data["ricci"] = matrix_json(ric);
  r.data["ricci_closed_form"] = matrix_json(closed.matrix());
  r.data["sectional"] = json{{"K12", curv.sectional(kE1, kE2)},
                             {"K13", curv.sectional(kE1, kXi)},
                             {"K23", curv.sectional(kE2, kXi)}};
  const auto ab = alpha_beta_identify(curv, sf, 1e-12);
  r.data["alpha_beta"] = ab ? json{{"alpha", ab->alpha}, {"beta", ab->beta}} : json(nullptr);
  r.data["eta_parallel_residual"] = eta_parallel_residual(sf, {});
  r.data["jacobi_defect"] = jacobi_defect(conn);
}

void cmd_table(const Options&, RunReport& r) {
  r.params = json{{"beta", 0.0}, {"mu", json::array({0.5, 2.0, 1.0})}};
  json rows = json::array();
  for (double mu : {0.5, 2.0, 1.0}) {
    const SolitonParams p = delta_coefficients(mu, 0.0);
    const GroupTag g = classify_group(NonSasakianModel(mu, 0.0));
    const std::string sign = p.case_tag == SolitonCase::I    ? "positive"
                             : p.case_tag == SolitonCase::II ? "negative"
                                                             : "zero";
    rows.push_back(json{{"mu", mu},
                        {"delta", sign},
                        {"potential_type", to_string(p.case_tag)},
                        {"soliton", to_string(p.soliton_type)},
                        {"group", to_string(g)}});
  }
  r.data["table"] = rows;
}

void cmd_heisenberg(const Options& o, RunReport& r) {
  const int grid = o.grid.value_or(3);
  if (grid < 0) throw UsageError("--grid must be >= 0");
  const FDConfig cfg = fd_config(o);
  const double tol = tolerance_or(o, kChartTolerance);
  std::optional<Eigen::Vector3d> point;
  if (o.point) point = parse_point(*o.point);

  const SasakianModel model{0.0};
  r.params = json{{"model", "heisenberg"}, {"c1", 0.0}, {"C", o.C}, {"D", o.D}, {"grid", grid},
                  {"step", cfg.step}};
  r.soliton = sasakian_params(0.0);
  r.group = classify_group(model);
  r.field = solve_sasakian_potential(0.0, o.C, o.D);

  const ChartMetric chart = heisenberg_chart();
  const Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  const double lambda = r.soliton->lambda;

  ResidualReport ricci_check("fd_ricci_origin", 1e-4);
  const Eigen::Matrix3d ric = to_frame(chart, origin, ricci_fd(chart, origin, cfg));
  const RicciMatrix expected = sasakian_model(0.0).ricci;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      ricci_check.record("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                         ric(i, j) - expected(i, j));
    }
  }
  ricci_check.points_checked = 1;
  r.residuals.push_back(ricci_check);

  const ChartResidual at_origin =
      chart_soliton_residual(chart, *r.field, lambda, origin, cfg, FieldCoordinates::Normal, tol);
  r.residuals.push_back(at_origin.report);
  r.data["origin_frame_residual"] = matrix_json(at_origin.frame);
  r.data["origin_fd_unstable"] = at_origin.fd_unstable;

  // Same field read in the matrix coordinates themselves: reported, not asserted.
  const ChartResidual literal =
      chart_soliton_residual(chart, *r.field, lambda, origin, cfg, FieldCoordinates::Chart, tol);
  r.data["matrix_coordinates_origin_frame_residual"] = matrix_json(literal.frame);
  r.data["matrix_coordinates_origin_max"] = literal.report.max_residual;

  if (point) {
    const ChartResidual at_point =
        chart_soliton_residual(chart, *r.field, lambda, *point, cfg, FieldCoordinates::Normal, tol);
    r.data["point"] = json{{"u", json::array({(*point)(0), (*point)(1), (*point)(2)})},
                           {"frame_residual", matrix_json(at_point.frame)},
                           {"max", at_point.report.max_residual}};
  }

  json field = json::array();
  double off_origin_max = 0.0;
  for (double u1 : linspace(-0.5, 0.5, static_cast<std::size_t>(grid))) {
    for (double u2 : linspace(-0.5, 0.5, static_cast<std::size_t>(grid))) {
      for (double t : linspace(-0.5, 0.5, static_cast<std::size_t>(grid))) {
        const Eigen::Vector3d q(u1, u2, t);
        const ChartResidual res =
            chart_soliton_residual(chart, *r.field, lambda, q, cfg, FieldCoordinates::Normal, tol);
        field.push_back(json{{"u", json::array({u1, u2, t})}, {"max", res.report.max_residual}});
        if (q.norm() > 0.0) off_origin_max = std::max(off_origin_max, res.report.max_residual);
      }
    }
  }
  r.data["residual_field"] = field;
  r.data["off_origin_max"] = off_origin_max;
}

void print_human(const RunReport& r, std::ostream& out) {
  out << "command: " << r.command << "\n";
  if (!r.params.empty()) {
    out << "params:";
    for (const auto& [k, v] : r.params.items()) out << " " << k << "=" << v.dump();
    out << "\n";
  }
  if (r.soliton) {
    const auto& s = *r.soliton;
    out << "lambda: " << format_double(s.lambda) << " (" << to_string(s.soliton_type) << ")\n"
        << "case: " << to_string(s.case_tag) << "\n"
        << "deltas: delta1=" << format_double(s.delta1) << " delta2=" << format_double(s.delta2)
        << " delta3=" << format_double(s.delta3) << " delta4=" << format_double(s.delta4)
        << " delta=" << format_double(s.delta) << "\n";
  }
  if (r.group) out << "group: " << to_string(*r.group) << "\n";
  if (r.field) {
    const auto text = describe(*r.field);
    out << "field: " << to_string(r.field->family) << "\n"
        << "  f1 = " << text[0] << "\n"
        << "  f2 = " << text[1] << "\n";
  }
  if (r.data.contains("table")) {
    out << "                   0<mu<1      mu>1        mu=1\n";
    auto row = [&](const char* title, const char* key) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%-18s", title);
      out << buf;
      for (const auto& entry : r.data["table"]) {
        std::snprintf(buf, sizeof buf, " %-11s", entry[key].get<std::string>().c_str());
        out << buf;
      }
      out << "\n";
    };
    row("delta", "delta");
    row("potential type", "potential_type");
    row("Ricci soliton", "soliton");
    row("Lie group", "group");
  } else if (!r.data.empty()) {
    for (const auto& [k, v] : r.data.items()) {
      if (k == "residual_field") {
        out << k << ": " << v.size() << " points (see --json)\n";
      } else {
        out << k << ": " << v.dump() << "\n";
      }
    }
  }
  for (const auto& res : r.residuals) {
    out << "residual " << res.name << ": max=" << format_double(res.max_residual)
        << " tol=" << format_double(res.tolerance) << " points=" << res.points_checked << " "
        << (res.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "pass: " << (r.pass() ? "yes" : "no") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contact 3-manifold geometry and transversal Ricci soliton calculator"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    void (*fn)(const Options&, RunReport&);
    bool informational;
  };
  const std::vector<Command> commands = {
      {"classify", "soliton constant, case, type and Lie group", cmd_classify, true},
      {"solve", "closed-form potential vector field", cmd_solve, true},
      {"verify", "residuals of the soliton system at the base point and along the Reeb axis",
       cmd_verify, false},
      {"curvature", "frame connection, curvature and Ricci tensor of a model", cmd_curvature,
       false},
      {"table", "the beta = 0 classification table", cmd_table, true},
      {"heisenberg", "full soliton residual on the Heisenberg chart", cmd_heisenberg, false},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common_options(sub, o);
    subs.push_back(sub);
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = commands[i].name;
    try {
      // flags every command accepts are checked up front, used or not
      fd_config(o);
      tolerance_or(o, 1.0);
      commands[i].fn(o, report);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitFail;
    }
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    if (o.json) {
      out << canonical_dump(to_json(report));
    } else {
      print_human(report, out);
    }
    out.flush();
    if (commands[i].informational) return kExitPass;
    return report.pass() ? kExitPass : kExitFail;
  }
  return kExitUsage;
}

}  // namespace contact3::cli
