#include "linext/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "linext/poisson.hpp"

namespace linext {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t k = s.find(sep, start);
    out.push_back(trim(std::string_view(s).substr(start, k == std::string::npos ? std::string::npos : k - start)));
    if (k == std::string::npos) return out;
    start = k + 1;
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<BallPoint> parse_vertices(const std::string& text) {
  std::vector<BallPoint> out;
  for (const std::string& item : split(text, ';')) {
    if (item.empty()) continue;
    const std::vector<std::string> xy = split(item, ',');
    if (xy.size() != 2 || xy[0].empty() || xy[1].empty())
      throw UsageError("malformed vertex '" + item + "': expected two complex coordinates 'a+bi,c+di'");
    out.push_back({parse_complex(xy[0]), parse_complex(xy[1])});
  }
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

std::string format_vertices(const std::vector<BallPoint>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += format_complex(v[i].z1) + "," + format_complex(v[i].z2);
  }
  return s;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const std::string& item : split(text, ';'))
    if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw UsageError("empty list of complex numbers");
  return out;
}

std::string format_complex_list(const std::vector<Complex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + format_complex(v[i]);
  return s;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string vertices, centers;
  CLI::App app{"Numerical tests of holomorphic extendibility from the sphere in C^2", "linext"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "report path (stdout when omitted)");
    s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--seed", cfg.seed, "random seed");
  };
  auto moments = [&](CLI::App* s) {
    s->add_option("--vertices", vertices, "semicolon-separated vertices 'a+bi,c; ...'");
    s->add_option("--lines", cfg.lines, "lines per vertex");
    s->add_option("--nodes", cfg.nodes, "quadrature nodes per circle (0: by smoothness)");
    s->add_option("--mmax", cfg.m_max, "highest tested negative index");
    s->add_option("--tol", cfg.tol, "residual tolerance (0: default)");
    s->add_option("--threads", cfg.threads, "worker threads (0: LINEXT_THREADS or all cores)");
  };

  CLI::App* test = app.add_subcommand("test", "bundle test of a boundary function");
  test->add_option("--function", cfg.function, "function spec")->required();
  moments(test);
  common(test);

  CLI::App* dec = app.add_subcommand("decompose", "angular slices and radial coefficients");
  dec->add_option("--function", cfg.function, "function spec")->required();
  dec->add_option("--numax", cfg.nu_max, "largest |nu|");
  dec->add_option("--levels", cfg.levels, "|z1| levels on [0, 1]");
  dec->add_option("--angles", cfg.angles, "arguments of z1 per level");
  dec->add_option("--nodes", cfg.nodes, "phase samples per slice (0: smallest power of two >= max(64, 4 numax + 16))");
  dec->add_option("--lmax", cfg.l_max, "highest radial coefficient");
  common(dec);

  CLI::App* disc = app.add_subcommand("disc-test", "hyperbolic circle family test and polyanalytic fit");
  disc->add_option("--function", cfg.function, "polynomial in z and zb (random when omitted)");
  disc->add_option("--centers", centers, "semicolon-separated centers c (random when omitted)");
  disc->add_option("--nu", cfg.nu, "order nu (-1: the function's order)");
  disc->add_option("--degree", cfg.degree, "degree of random or fitted h_k");
  disc->add_option("--radii", cfg.radii, "hyperbolic radii per center");
  disc->add_option("--mmax", cfg.m_max, "highest tested negative index");
  disc->add_option("--nodes", cfg.nodes, "samples per circle (0: 128)");
  disc->add_option("--tol", cfg.tol, "coefficient tolerance (0: 1e-9)");
  disc->add_flag("--fit", cfg.fit, "also fit a polyanalytic function of order nu");
  common(disc);

  CLI::App* poi = app.add_subcommand("poisson-check", "kernel invariance and M-harmonicity suite");
  poi->add_option("--function", cfg.function, "function spec (modsq when omitted)");
  poi->add_option("--points", cfg.points, "interior points per check");
  common(poi);

  CLI::App* cs = app.add_subcommand("charspec-roundtrip", "generate a characterized function and recover it");
  cs->add_option("--function", cfg.function, "charspec:<path> (random when omitted)");
  cs->add_option("--numax", cfg.spec_nu, "largest nu of the random spec");
  cs->add_option("--degree", cfg.degree, "degree of the random h");
  moments(cs);
  common(cs);

  std::vector<std::string> argv_store = {"linext"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!vertices.empty()) cfg.vertices = parse_vertices(vertices);
  if (!centers.empty()) cfg.centers = parse_complex_list(centers);
  if (cfg.command == "test" && cfg.vertices.empty()) throw UsageError("test: --vertices is required");
  return cfg;
}

std::vector<std::string> to_args(const RunConfig& cfg) {
  std::vector<std::string> a = {cfg.command};
  auto opt = [&](const char* name, const std::string& v) {
    a.push_back(name);
    a.push_back(v);
  };
  if (!cfg.function.empty()) opt("--function", cfg.function);
  const std::string& c = cfg.command;
  if (c == "test" || c == "charspec-roundtrip") {
    if (!cfg.vertices.empty()) opt("--vertices", format_vertices(cfg.vertices));
    opt("--lines", std::to_string(cfg.lines));
    opt("--nodes", std::to_string(cfg.nodes));
    opt("--mmax", std::to_string(cfg.m_max));
    opt("--tol", format_double(cfg.tol));
    opt("--threads", std::to_string(cfg.threads));
  }
  if (c == "decompose") {
    opt("--numax", std::to_string(cfg.nu_max));
    opt("--levels", std::to_string(cfg.levels));
    opt("--angles", std::to_string(cfg.angles));
    opt("--nodes", std::to_string(cfg.nodes));
    opt("--lmax", std::to_string(cfg.l_max));
  }
  if (c == "disc-test") {
    if (!cfg.centers.empty()) opt("--centers", format_complex_list(cfg.centers));
    opt("--nu", std::to_string(cfg.nu));
    opt("--degree", std::to_string(cfg.degree));
    opt("--radii", std::to_string(cfg.radii));
    opt("--mmax", std::to_string(cfg.m_max));
    opt("--nodes", std::to_string(cfg.nodes));
    opt("--tol", format_double(cfg.tol));
    if (cfg.fit) a.push_back("--fit");
  }
  if (c == "poisson-check") opt("--points", std::to_string(cfg.points));
  if (c == "charspec-roundtrip") {
    opt("--numax", std::to_string(cfg.spec_nu));
    opt("--degree", std::to_string(cfg.degree));
  }
  opt("--seed", std::to_string(cfg.seed));
  opt("--format", cfg.format);
  if (!cfg.out.empty()) opt("--out", cfg.out);
  return a;
}

Json to_json(const RunConfig& cfg) {
  Json args = Json::array();
  for (const std::string& s : to_args(cfg)) args.push_back(s);
  return {{"command", cfg.command}, {"args", std::move(args)}};
}

namespace {

using Clock = std::chrono::steady_clock;

BallPoint random_point(std::mt19937_64& rng, double rmax) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BallPoint p{{g(rng), g(rng)}, {g(rng), g(rng)}};
  return (rmax * std::sqrt(u(rng)) / p.norm()) * p;
}

BallPoint random_sphere_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  BallPoint p{{g(rng), g(rng)}, {g(rng), g(rng)}};
  return (1.0 / p.norm()) * p;
}

BallMobius random_automorphism(std::mt19937_64& rng, double cmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Complex c1 = std::polar(cmax * u(rng), 2.0 * 3.141592653589793 * u(rng));
  return BallMobius(unitary_with_first_column(random_sphere_point(rng)), c1,
                    unitary_with_first_column(random_sphere_point(rng)));
}

Json check_entry(const std::string& name, double value, double tol, Verdict v, std::size_t count) {
  return {{"check", name}, {"max_error", value}, {"tol", tol}, {"samples", count}, {"verdict", to_string(v)}};
}

void run_test(const RunConfig& cfg, ReportEnvelope& env) {
  const BoundaryFunction f = parse_function_spec(cfg.function);
  BundleOptions opt;
  opt.lines_per_vertex = cfg.lines;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.moments.m_max = cfg.m_max;
  opt.moments.n = cfg.nodes;
  if (cfg.tol > 0) opt.moments.tol = cfg.tol;
  const BundleReport b = bundle_test(f, cfg.vertices, opt);
  env.verdict = b.verdict;
  for (const MomentReport& r : b.reports) env.reports.push_back(to_json(r));
  env.worst_offender = to_json(b.reports[b.worst]);
  Json verts = Json::array();
  for (const BallPoint& v : b.vertices) verts.push_back(to_json(v));
  env.summary = {{"function", f.description()},
                 {"family", to_string(f.family())},
                 {"vertices", std::move(verts)},
                 {"collinear_vertices", b.collinear},
                 {"lines_tested", b.reports.size()},
                 {"max_residual", b.reports[b.worst].max_residual}};
  env.csv = residuals_csv(b);
}

void run_decompose(const RunConfig& cfg, ReportEnvelope& env) {
  const BoundaryFunction f = parse_function_spec(cfg.function);
  std::size_t n_phi = cfg.nodes;
  if (n_phi == 0)
    for (n_phi = 64; n_phi < 4 * std::size_t(std::max(cfg.nu_max, 0)) + 16;) n_phi *= 2;
  PointEvaluator F = [&f](const BallPoint& z) { return f(z); };
  const SliceGrid grid = decompose(F, sphere_nodes(cfg.levels, cfg.angles), cfg.nu_max, n_phi);
  double recon = 0.0;
  for (const SliceNode& node : grid.nodes) {
    const BallPoint z{node.z1, node.r};
    recon = std::max(recon, std::abs(reconstruct(grid, z, cfg.nu_max) - f(z)));
  }
  const std::vector<int> active = grid.active(1e-10);

  std::vector<Complex> z1;
  for (const SliceNode& node : grid.nodes)
    if (std::abs(node.z1) < 1.0 - 1e-9) z1.push_back(node.z1);
  Json radial = Json::array();
  for (int nu : active)
    if (nu >= 0) radial.push_back(to_json(radial_coeffs(sphere_slice_evaluator(F, nu, n_phi), z1, nu, cfg.l_max,
                                             2 * std::size_t(std::max(cfg.l_max, 0)) + 2)));

  // Slices beyond numax leave a truncation remainder; that is unresolved, not a failure.
  env.verdict = recon < 1e-8 ? Verdict::pass : Verdict::inconclusive;
  env.reports.push_back({{"kind", "slice_grid"}, {"grid", to_json(grid)}});
  env.reports.push_back({{"kind", "radial_coeffs"}, {"coeffs", std::move(radial)}});
  env.summary = {{"function", f.description()},
                 {"active_slices", active},
                 {"reconstruction_error", recon},
                 {"nodes", grid.nodes.size()}};
  env.csv = slices_csv(grid);
}

void run_disc(const RunConfig& cfg, ReportEnvelope& env) {
  std::mt19937_64 rng(cfg.seed);
  const int order_hint = cfg.nu >= 0 ? cfg.nu : 2;
  const PolyanalyticFunction e = cfg.function.empty() || cfg.function == "random"
                                     ? PolyanalyticFunction::random(cfg.seed, order_hint, cfg.degree)
                                     : PolyanalyticFunction::parse(cfg.function);
  const int nu = cfg.nu >= 0 ? cfg.nu : e.order();
  std::vector<Complex> centers = cfg.centers;
  if (centers.empty()) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5; ++i) centers.push_back(std::polar(0.8 * std::sqrt(u(rng)), 2.0 * 3.141592653589793 * u(rng)));
  }
  if (cfg.radii < 1) throw UsageError("disc-test: --radii must be >= 1");
  std::vector<double> radii;
  for (int i = 0; i < cfg.radii; ++i) radii.push_back(cfg.radii == 1 ? 0.5 : 0.1 + 0.8 * i / (cfg.radii - 1));

  CircleOptions opt;
  opt.m_max = cfg.m_max;
  opt.n = cfg.nodes ? cfg.nodes : 128;
  if (cfg.tol > 0) opt.tol = cfg.tol;
  std::string csv;
  for (Complex c : centers) {
    const FamilyReport fr = hyperbolic_family_test(DiscEvaluator(e), c, nu, radii, opt);
    env.verdict = combine(env.verdict, fr.verdict);
    Json j = to_json(fr);
    j["kind"] = "hyperbolic_family";
    if (env.worst_offender.is_null() && fr.verdict != Verdict::pass) env.worst_offender = j;
    env.reports.push_back(std::move(j));
    csv += family_csv(fr);
  }
  Json summary = {{"function", to_json(e)}, {"nu", nu}, {"budget", std::max(nu, 0)}, {"centers", centers.size()}};
  if (cfg.fit) {
    const PolyanalyticFit fit = polyanalytic_fit(DiscEvaluator(e), nu, default_fit_radii(nu), 64,
                                                 std::max(cfg.degree, e.degree()));
    const Verdict fv = fit.residual < 1e-8 ? Verdict::pass : Verdict::fail;
    env.verdict = combine(env.verdict, fv);
    Json j = to_json(fit);
    j["kind"] = "polyanalytic_fit";
    j["verdict"] = to_string(fv);
    if (env.worst_offender.is_null() && fv != Verdict::pass) env.worst_offender = j;
    env.reports.push_back(std::move(j));
    summary["fit_residual"] = fit.residual;
  }
  env.summary = std::move(summary);
  env.csv = csv;
}

void run_poisson(const RunConfig& cfg, ReportEnvelope& env) {
  const BoundaryFunction f = parse_function_spec(cfg.function.empty() ? "modsq" : cfg.function);
  const SphereQuadrature quad = SphereQuadrature::product();
  std::mt19937_64 rng(cfg.seed);
  bool inconclusive = false;
  auto verdict_of = [](double err, double tol) { return err < tol ? Verdict::pass : Verdict::fail; };
  auto add = [&](Json j, Verdict v) {
    env.verdict = combine(env.verdict, v);
    if (env.worst_offender.is_null() && v != Verdict::pass) env.worst_offender = j;
    env.reports.push_back(std::move(j));
  };

  const BoundaryFunction one = make_custom("one", [](const BallPoint&) { return Complex(1.0); }, Smoothness::analytic());
  std::vector<BallPoint> pts = {{0.7, 0.0}, {0.0, Complex(0, 0.7)}, {0.3, Complex(0, 0.2)}};
  for (int i = 0; i < cfg.points; ++i) pts.push_back(random_point(rng, 0.7));
  double norm_err = 0.0;
  for (const BallPoint& z : pts) norm_err = std::max(norm_err, std::abs(integral(one, z, quad).value - 1.0));
  add(check_entry("normalization", norm_err, 1e-9, verdict_of(norm_err, 1e-9), pts.size()), verdict_of(norm_err, 1e-9));

  double inv_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const BallMobius w = random_automorphism(rng, 0.7);
    const BallPoint z = random_point(rng, 0.7), xi = random_sphere_point(rng);
    inv_err = std::max(inv_err, kernel_invariance_defect(w, z, xi) / std::max(1.0, kernel(z, xi)));
  }
  add(check_entry("kernel_invariance", inv_err, 1e-11, verdict_of(inv_err, 1e-11), 200), verdict_of(inv_err, 1e-11));

  const auto pf = poisson_extension(f, quad);
  double lap_err = 0.0, repro_err = 0.0;
  std::vector<BallPoint> inner_pts;
  for (int i = 0; i < cfg.points; ++i) inner_pts.push_back(random_point(rng, 0.5));
  for (const BallPoint& z : inner_pts) {
    if (integral(f, z, quad).inconclusive) inconclusive = true;
    lap_err = std::max(lap_err, std::abs(invariant_laplacian_fd(pf, z, 1e-3)));
    if (f.family() == Family::holomorphic_poly) repro_err = std::max(repro_err, std::abs(pf(z) - f(z)));
  }
  Verdict lv = verdict_of(lap_err, 1e-4);
  if (lv == Verdict::fail && inconclusive) lv = Verdict::inconclusive;
  add(check_entry("m_harmonicity", lap_err, 1e-4, lv, inner_pts.size()), lv);
  if (f.family() == Family::holomorphic_poly)
    add(check_entry("reproduction", repro_err, 1e-8, verdict_of(repro_err, 1e-8), inner_pts.size()),
        verdict_of(repro_err, 1e-8));

  env.summary = {{"function", f.description()},
                 {"measure", "normalized surface measure, total mass 1"},
                 {"quadrature", {quad.n_alpha, quad.n_beta, quad.n_u}}};
  std::string csv = "check,max_error,tol,verdict\n";
  for (const Json& j : env.reports)
    csv += j["check"].get<std::string>() + "," + format_double(j["max_error"].get<double>()) + "," +
           format_double(j["tol"].get<double>()) + "," + j["verdict"].get<std::string>() + "\n";
  env.csv = csv;
}

void run_charspec(const RunConfig& cfg, ReportEnvelope& env) {
  CharacterizedSpec spec;
  if (cfg.function.empty()) {
    spec = CharacterizedSpec::random(cfg.seed, cfg.spec_nu, cfg.degree);
  } else {
    const BoundaryFunction g = parse_function_spec(cfg.function);
    if (!g.characterized_spec()) throw UsageError("charspec-roundtrip: --function must be charspec:<path>");
    spec = *g.characterized_spec();
  }
  const BoundaryFunction f = make_characterized(spec);

  BundleOptions bopt;
  bopt.lines_per_vertex = cfg.lines;
  bopt.seed = cfg.seed;
  bopt.threads = cfg.threads;
  bopt.moments.m_max = cfg.m_max;
  bopt.moments.n = cfg.nodes;
  if (cfg.tol > 0) bopt.moments.tol = cfg.tol;
  const std::vector<BallPoint> verts = cfg.vertices.empty() ? std::vector<BallPoint>{{0.3, 0.0}, {-0.2, 0.0}} : cfg.vertices;
  const BundleReport b = bundle_test(f, verts, bopt);

  CharacterizedFitOptions fopt;
  fopt.nu_max = std::max(spec.max_nu(), 1);
  fopt.degree = std::max(spec.max_degree(), 0);
  const CharacterizedFit fit = fit_characterized(f, fopt);
  const double err = relative_coefficient_error(spec, fit.spec);
  const Verdict fv = err < 1e-6 ? Verdict::pass : Verdict::fail;

  env.verdict = combine(b.verdict, fv);
  env.reports.push_back({{"kind", "bundle"},
                         {"verdict", to_string(b.verdict)},
                         {"lines", b.reports.size()},
                         {"max_residual", b.reports[b.worst].max_residual}});
  env.reports.push_back({{"kind", "recovery"},
                         {"verdict", to_string(fv)},
                         {"relative_error", err},
                         {"fit_residual", fit.residual},
                         {"negative_slice_max", fit.negative_slice_max},
                         {"truth", Json::parse(spec.to_json_text())},
                         {"recovered", Json::parse(fit.spec.to_json_text())}});
  if (b.verdict != Verdict::pass) env.worst_offender = to_json(b.reports[b.worst]);
  else if (fv != Verdict::pass) env.worst_offender = env.reports.back();
  env.summary = {{"terms", spec.terms.size()}, {"relative_error", err}, {"bundle_max_residual", b.reports[b.worst].max_residual}};
  env.csv = residuals_csv(b);
}

}  // namespace

ReportEnvelope execute(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  ReportEnvelope env;
  env.command = cfg.command;
  env.config_echo = to_json(cfg);
  if (cfg.command == "test") run_test(cfg, env);
  else if (cfg.command == "decompose") run_decompose(cfg, env);
  else if (cfg.command == "disc-test") run_disc(cfg, env);
  else if (cfg.command == "poisson-check") run_poisson(cfg, env);
  else if (cfg.command == "charspec-roundtrip") run_charspec(cfg, env);
  else throw UsageError("unknown command '" + cfg.command + "'");
  env.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return env;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 3;
}

int run(const std::vector<std::string>& args) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const Error& e) {
    std::cerr << "linext: " << e.what() << '\n';
    return 2;
  }
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "linext: cannot write " << cfg.out << '\n';
      return 2;
    }
  }
  ReportEnvelope env;
  try {
    env = execute(cfg);
  } catch (const std::exception& e) {
    std::cerr << "linext: " << e.what() << '\n';
    return 2;
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  if (cfg.format == "csv") os << env.csv;
  else os << to_json(env).dump(2) << '\n';
  if (!cfg.out.empty()) {
    file.close();
    if (!file) {
      std::cerr << "linext: cannot write " << cfg.out << '\n';
      return 2;
    }
    std::cerr << cfg.command << ": " << to_string(env.verdict) << '\n';
  }
  return exit_code(env.verdict);
}

}  // namespace linext
