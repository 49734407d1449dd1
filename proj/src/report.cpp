#include "contact3/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace contact3 {

using nlohmann::json;

bool RunReport::pass() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const ResidualReport& r) { return r.pass; });
}

json to_json(const SolitonParams& p) {
  return json{
      {"lambda", p.lambda},
      {"deltas", json::array({p.delta1, p.delta2, p.delta3, p.delta4, p.delta})},
      {"case", to_string(p.case_tag)},
      {"type", to_string(p.soliton_type)},
  };
}

namespace {

json affine_json(const AffineForm& a) {
  return json{{"u1", a.coef_u1}, {"u2", a.coef_u2}, {"const", a.constant}};
}

}  // namespace

json to_json(const PotentialField& pf) {
  const auto text = describe(pf);
  return json{
      {"family", to_string(pf.family)},
      {"case", to_string(pf.case_tag)},
      {"rate", pf.rate},
      {"C", pf.C},
      {"D", pf.D},
      {"A1", affine_json(pf.A1)},
      {"B1", affine_json(pf.B1)},
      {"A2", affine_json(pf.A2)},
      {"B2", affine_json(pf.B2)},
      {"f1", text[0]},
      {"f2", text[1]},
      {"pointwise_independent", pointwise_independent(pf)},
  };
}

json to_json(const ResidualReport& r) {
  json components = json::object();
  for (const auto& e : r.entries) components[e.name] = e.value;
  return json{
      {"name", r.name},
      {"max", r.max_residual},
      {"pass", r.pass},
      {"tolerance", r.tolerance},
      {"points", r.points_checked},
      {"components", components},
  };
}

json to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["soliton"] = r.soliton ? to_json(*r.soliton) : json(nullptr);
  j["group"] = r.group ? json(to_string(*r.group)) : json(nullptr);
  j["field"] = r.field ? to_json(*r.field) : json(nullptr);
  j["residuals"] = json::array();
  for (const auto& res : r.residuals) j["residuals"].push_back(to_json(res));
  j["data"] = r.data;
  j["pass"] = r.pass();
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

json matrix_json(const Eigen::Matrix3d& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_into(const json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        dump_into(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ",\n";
        out += pad;
        dump_into(j[i], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

std::string term(double coef, const std::string& var) {
  return format_double(coef) + "*" + var;
}

std::string affine_text(const AffineForm& a) {
  return "(" + term(a.coef_u1, "u1") + " + " + term(a.coef_u2, "u2") + " + " +
         format_double(a.constant) + ")";
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

std::array<std::string, 2> describe(const PotentialField& pf) {
  std::string p, q;
  const std::string r = format_double(pf.rate);
  switch (pf.case_tag) {
    case SolitonCase::I: p = "exp(" + r + "*t)"; q = "exp(-" + r + "*t)"; break;
    case SolitonCase::II: p = "cos(" + r + "*t)"; q = "sin(" + r + "*t)"; break;
    case SolitonCase::III: p = "1"; q = "t"; break;
  }
  return {
      affine_text(pf.A1) + "*" + p + " + " + affine_text(pf.B1) + "*" + q,
      affine_text(pf.A2) + "*" + p + " + " + affine_text(pf.B2) + "*" + q,
  };
}

}  // namespace contact3
