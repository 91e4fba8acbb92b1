#include "linext/report.hpp"

#include <sstream>

namespace linext {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const BallPoint& z) { return Json::array({to_json(z.z1), to_json(z.z2)}); }

Json to_json(const ComplexLine& line) { return {{"base", to_json(line.base)}, {"dir", to_json(line.dir)}}; }

Json to_json(const MomentReport& r) {
  Json res = Json::array();
  for (const auto& [m, v] : r.residuals) res.push_back({{"m", m}, {"abs", v}});
  return {{"route", r.route},
          {"line", to_json(r.line)},
          {"circle", {{"lambda0", to_json(r.circle.lambda0)}, {"rho", r.circle.rho}}},
          {"verdict", to_string(r.verdict)},
          {"max_residual", r.max_residual},
          {"worst_index", r.worst_index},
          {"n", r.n},
          {"n_used", r.n_used},
          {"m_max", r.m_max},
          {"pole_budget", r.pole_budget},
          {"tol", r.tol},
          {"aliasing_estimate", r.aliasing_estimate},
          {"residuals", std::move(res)}};
}

Json to_json(const SliceGrid& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Json vals = Json::array();
    for (const Complex& v : g.values[i]) vals.push_back(to_json(v));
    nodes.push_back({{"index", i}, {"z1", to_json(g.nodes[i].z1)}, {"r", g.nodes[i].r}, {"slices", std::move(vals)}});
  }
  return {{"nu_max", g.nu_max},
          {"nu_index", "slices[k] holds nu = k - nu_max"},
          {"n_phi", g.n_phi},
          {"nodes", std::move(nodes)}};
}

Json to_json(const RadialCoeffs& c) {
  Json z1 = Json::array(), a = Json::array(), b = Json::array();
  for (const Complex& z : c.z1) z1.push_back(to_json(z));
  for (int l = 0; l <= c.l_max; ++l) {
    Json al = Json::array(), bl = Json::array();
    for (std::size_t i = 0; i < c.z1.size(); ++i) {
      al.push_back(to_json(c.a[l][i]));
      bl.push_back(to_json(c.b[l][i]));
    }
    a.push_back(std::move(al));
    b.push_back(std::move(bl));
  }
  return {{"nu", c.nu}, {"l_max", c.l_max}, {"index", "a[l][i], b[l][i] at z1[i]"}, {"z1", std::move(z1)},
          {"a", std::move(a)}, {"b", std::move(b)}};
}

Json to_json(const CircleExtensionReport& r, int budget) {
  Json coeffs = Json::array();
  for (const auto& [m, c] : r.coeffs) coeffs.push_back({{"m", m}, {"value", to_json(c)}, {"abs", std::abs(c)}});
  return {{"center", to_json(r.circle.e)},
          {"radius", r.circle.t},
          {"budget", budget},
          {"detected_order", r.detected_order},
          {"verdict", to_string(r.verdict(budget))},
          {"ambiguous", r.ambiguous},
          {"saturated", r.saturated},
          {"n", r.n},
          {"n_used", r.n_used},
          {"tol", r.tol},
          {"coefficients", std::move(coeffs)}};
}

Json to_json(const FamilyReport& r) {
  Json circles = Json::array();
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    Json j = to_json(r.reports[i], r.budget);
    j["hyperbolic_radius"] = r.circles[i].r;
    circles.push_back(std::move(j));
  }
  return {{"c", to_json(r.c)},
          {"nu", r.nu},
          {"budget", r.budget},
          {"verdict", to_string(r.verdict)},
          {"circles", std::move(circles)}};
}

Json to_json(const PolyanalyticFunction& f) {
  Json h = Json::array();
  for (const Polynomial& p : f.h()) {
    Json c = Json::array();
    for (const Complex& x : p.coeffs()) c.push_back(to_json(x));
    h.push_back(std::move(c));
  }
  return {{"order", f.order()}, {"h", std::move(h)}};
}

Json to_json(const PolyanalyticFit& f) {
  return {{"function", to_json(f.function)}, {"residual", f.residual}, {"condition", f.condition}};
}

Json to_json(const ReportEnvelope& e) {
  Json j = {{"schema_version", kSchemaVersion},
            {"command", e.command},
            {"config_echo", e.config_echo},
            {"verdict", to_string(e.verdict)},
            {"summary", e.summary},
            {"reports", e.reports},
            {"worst_offender", e.worst_offender},
            {"runtime_ms", e.runtime_ms}};
  return j;
}

Json comparison_body(const Json& report) {
  Json j = report;
  j.erase("runtime_ms");
  return j;
}

std::string residuals_csv(const BundleReport& b) {
  std::ostringstream os;
  os.precision(17);
  os << "line,m,residual,verdict\n";
  for (std::size_t i = 0; i < b.reports.size(); ++i)
    for (const auto& [m, v] : b.reports[i].residuals) os << i << ',' << m << ',' << v << ',' << to_string(b.reports[i].verdict) << '\n';
  return os.str();
}

std::string slices_csv(const SliceGrid& g) {
  std::ostringstream os;
  os.precision(17);
  os << "node,z1_re,z1_im,r,nu,re,im\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (int nu = -g.nu_max; nu <= g.nu_max; ++nu) {
      const Complex v = g.slice(i, nu);
      os << i << ',' << g.nodes[i].z1.real() << ',' << g.nodes[i].z1.imag() << ',' << g.nodes[i].r << ',' << nu << ','
         << v.real() << ',' << v.imag() << '\n';
    }
  return os.str();
}

std::string family_csv(const FamilyReport& f) {
  std::ostringstream os;
  os.precision(17);
  os << "circle,e_re,e_im,t,m,abs\n";
  for (std::size_t i = 0; i < f.reports.size(); ++i)
    for (const auto& [m, c] : f.reports[i].coeffs)
      os << i << ',' << f.circles[i].e.real() << ',' << f.circles[i].e.imag() << ',' << f.circles[i].t << ',' << m << ','
         << std::abs(c) << '\n';
  return os.str();
}

std::string validate_report(const Json& r) {
  if (!r.is_object()) return "report is not an object";
  for (const char* key : {"schema_version", "command", "config_echo", "verdict", "summary", "reports", "worst_offender", "runtime_ms"})
    if (!r.contains(key)) return std::string("missing field ") + key;
  if (r["schema_version"] != kSchemaVersion) return "unknown schema_version";
  if (!r["command"].is_string()) return "command must be a string";
  if (!r["config_echo"].is_object()) return "config_echo must be an object";
  if (!r["summary"].is_object()) return "summary must be an object";
  const Json& v = r["verdict"];
  if (!v.is_string() || (v != "pass" && v != "fail" && v != "inconclusive")) return "bad verdict";
  if (!r["reports"].is_array()) return "reports must be an array";
  for (const Json& x : r["reports"])
    if (!x.is_object()) return "every report must be an object";
  if (!r["worst_offender"].is_null() && !r["worst_offender"].is_object()) return "worst_offender must be an object or null";
  if (!r["runtime_ms"].is_number() || r["runtime_ms"].get<double>() < 0) return "runtime_ms must be a non-negative number";
  return {};
}

}  // namespace linext
