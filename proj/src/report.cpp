#include <mcj/report.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mcj {

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write(const Json& j, std::string& out, int indent) {
  std::string pad(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write(it.value(), out, indent + 2);
      }
      out += "\n" + std::string(indent, ' ') + "}";
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars, or of scalar arrays, stay on one line.
      auto scalars = [](const Json& a) {
        return std::all_of(a.begin(), a.end(), [](const Json& e) { return e.is_primitive(); });
      };
      bool flat = std::all_of(j.begin(), j.end(), [&](const Json& e) {
        return e.is_primitive() || (e.is_array() && scalars(e));
      });
      if (j.empty()) {
        out += "[]";
      } else if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); i++) {
          if (i) out += ", ";
          write(j[i], out, indent);
        }
        out += "]";
      } else {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); i++) {
          if (i) out += ",\n";
          out += pad;
          write(j[i], out, indent + 2);
        }
        out += "\n" + std::string(indent, ' ') + "]";
      }
      return;
    }
    case Json::value_t::number_float:
      out += number(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json params_json(const ParamSet& p) {
  return {{"r", p.r}, {"d", p.d.get_str()}, {"alpha", p.alpha}, {"nu", p.nu}};
}

Json orth_report_json(const OrthReport& rep) {
  Json j;
  j["params"] = params_json(rep.params);
  j["max_weight"] = rep.max_weight;
  j["rule"] = {{"kind", to_string(rep.kind)},
               {"points_per_axis", rep.points_per_axis},
               {"axis_exponent", rep.axis_exponent},
               {"pair_exponent", rep.pair_exponent},
               {"subdivided", rep.subdivided}};
  Json parts = Json::array();
  for (const auto& m : rep.partitions) parts.push_back(m.to_string());
  j["partitions"] = parts;
  Json gram = Json::array();
  for (int a = 0; a < rep.gram.rows(); a++) {
    Json row = Json::array();
    for (int b = 0; b < rep.gram.cols(); b++) row.push_back(complex_json(rep.gram(a, b)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  j["expected"] = rep.expected;
  j["residuals"] = {{"off_diagonal", rep.off_diag_residual},
                    {"diagonal", rep.diag_residual},
                    {"hermitian_defect", rep.hermitian_defect}};
  j["tolerances"] = {{"off_diagonal", rep.tol_off}, {"diagonal", rep.tol_diag}};
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["diagnostics"] = {{"coarse_points", rep.coarse_points},
                      {"resolution_delta", rep.resolution_delta},
                      {"residual_ratio", rep.residual_ratio},
                      {"pass", rep.diagnostic_pass}};
  if (!rep.classification.empty()) j["classification"] = rep.classification;
  return j;
}

Json sweep_json(const SweepResult& sweep) {
  Json reports = Json::array();
  for (const auto& rep : sweep.reports) reports.push_back(orth_report_json(rep));
  return {{"reports", reports}, {"skipped", sweep.skipped}};
}

std::string dump_json(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

std::string gram_modulus_csv(const OrthReport& rep) {
  std::ostringstream os;
  os << "partition";
  for (const auto& m : rep.partitions) os << ",\"" << m.to_string() << "\"";
  os << "\n";
  for (int a = 0; a < rep.gram.rows(); a++) {
    os << "\"" << rep.partitions[a].to_string() << "\"";
    for (int b = 0; b < rep.gram.cols(); b++) os << "," << number(std::abs(rep.gram(a, b)));
    os << "\n";
  }
  return os.str();
}

std::string orth_report_text(const OrthReport& rep) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s max_weight=%d rule=%s points=%d%s\n"
                "  off-diagonal %.3e (tol %.1e)  diagonal %.3e (tol %.1e)  hermitian %.2e\n"
                "  diagnostic: coarse=%d delta=%.3e ratio=%.3e %s\n"
                "  %s%s%s (%.2fs)\n",
                rep.params.describe().c_str(), rep.max_weight, to_string(rep.kind).c_str(),
                rep.points_per_axis, rep.subdivided ? " subdivided" : "", rep.off_diag_residual, rep.tol_off,
                rep.diag_residual, rep.tol_diag, rep.hermitian_defect, rep.coarse_points,
                rep.resolution_delta, rep.residual_ratio, rep.diagnostic_pass ? "ok" : "unresolved",
                rep.pass ? "PASS" : "FAIL", rep.classification.empty() ? "" : " ",
                rep.classification.c_str(), rep.wall_seconds);
  return buf;
}

}  // namespace mcj
