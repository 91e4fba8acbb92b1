#include "linext/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <set>
#include <thread>

#include "linext/spectral.hpp"

namespace linext {

std::size_t default_nodes(const BoundaryFunction& f) {
  return f.smoothness().kind == Smoothness::Kind::analytic ? 512 : 2048;
}

namespace {

constexpr std::size_t kMaxNodes = std::size_t(1) << 20;

struct Residuals {
  std::map<int, double> values;
  std::vector<Complex> coeffs;  // indexed like `values`, signed
  double max = 0.0;
  int worst = 0;
};

Residuals residuals_in(const std::vector<Complex>& samples, int lo, int hi) {
  const std::vector<Complex> all = fourier_coefficients(samples);
  const long n = static_cast<long>(all.size());
  Residuals r;
  r.worst = hi;
  for (int m = lo; m <= hi; ++m) {
    const Complex c = all[(m % n + n) % n];
    r.coeffs.push_back(c);
    const double a = std::abs(c);
    r.values[m] = a;
    if (a > r.max) {
      r.max = a;
      r.worst = m;
    }
  }
  return r;
}

// Shared decision protocol for both routes.  `sample(n)` returns n uniform
// samples of the periodic function whose negative coefficients on [lo, hi]
// must vanish.
template <class Sampler>
void decide(MomentReport& rep, Sampler&& sample, int lo, int hi, const MomentOptions& opt, std::size_t n) {
  rep.n = n;
  rep.n_used = n;
  rep.tol = opt.tol;
  rep.m_max = opt.m_max;
  rep.pole_budget = opt.pole_budget;
  if (lo > hi) {  // budget covers every index: vacuous pass
    rep.verdict = Verdict::pass;
    return;
  }
  Residuals r = residuals_in(sample(n), lo, hi);
  if (r.max < opt.tol || !opt.saturation_check || 2 * n > kMaxNodes) {
    rep.verdict = r.max < opt.tol ? Verdict::pass : Verdict::fail;
  } else {
    Residuals r2 = residuals_in(sample(2 * n), lo, hi);
    double alias = 0.0;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) alias = std::max(alias, std::abs(r.coeffs[i] - r2.coeffs[i]));
    rep.aliasing_estimate = alias;
    rep.n_used = 2 * n;
    if (r2.max < opt.tol) rep.verdict = Verdict::pass;
    else if (alias <= 0.1 * r2.max) rep.verdict = Verdict::fail;  // coefficient resolved and nonzero
    else rep.verdict = Verdict::inconclusive;
    r = std::move(r2);
  }
  rep.residuals = std::move(r.values);
  rep.max_residual = r.max;
  rep.worst_index = r.worst;
}

void check_options(const MomentOptions& opt, std::size_t n) {
  if (opt.m_max < 1) throw UsageError("moment test: m_max must be >= 1");
  if (!is_power_of_two(n)) throw UsageError("moment test: node count must be a power of two");
  if (n < 4 * static_cast<std::size_t>(opt.m_max)) throw UsageError("moment test: need N >= 4 m_max");
  if (opt.pole_budget < 0) throw UsageError("moment test: pole budget must be >= 0");
  if (!(opt.tol > 0.0)) throw UsageError("moment test: tolerance must be positive");
}

}  // namespace

MomentReport line_extension_residuals(const BoundaryFunction& f, const ComplexLine& line, const MomentOptions& opt) {
  const std::size_t n = opt.n == 0 ? default_nodes(f) : opt.n;
  check_options(opt, n);
  MomentReport rep;
  rep.route = "line";
  rep.line = canonical(line);
  rep.circle = line_boundary_circle(rep.line);
  decide(rep, [&](std::size_t nn) { return evaluate_on_circle(f, rep.line, nn); }, -opt.m_max, -opt.pole_budget - 1, opt, n);
  return rep;
}

ComplexLine image_line(const BallMobius& omega, const BallPoint& z) {
  const BallPoint a = omega(BallPoint{});
  return ComplexLine::make(a, omega(z) - a);
}

MomentReport automorphism_moment_residuals(const BoundaryFunction& f, const BallMobius& omega, const BallPoint& z,
                                           const MomentOptions& opt) {
  const std::size_t n = opt.n == 0 ? default_nodes(f) : opt.n;
  check_options(opt, n);
  if (!z.on_sphere()) throw DomainError("automorphism_moment_residuals: z must lie on the sphere");
  MomentReport rep;
  rep.route = "automorphism";
  rep.line = image_line(omega, z);
  rep.circle = line_boundary_circle(rep.line);
  auto sample = [&](std::size_t nn) {
    const std::vector<double> th = uniform_angles(nn);
    std::vector<Complex> out(nn);
    for (std::size_t j = 0; j < nn; ++j) out[j] = f(omega(std::polar(1.0, th[j]) * z));
    return out;
  };
  decide(rep, sample, -(opt.m_max + 1), -opt.pole_budget - 1, opt, n);
  return rep;
}

std::vector<BallPoint> sample_directions(std::size_t count, std::uint64_t seed) {
  Unitary rot = Unitary::identity();
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    rot = unitary_with_first_column({a / nrm, b / nrm});
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<BallPoint> dirs;
  dirs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double zc = 1.0 - (2.0 * double(k) + 1.0) / double(count);
    const double polar = std::acos(std::clamp(zc, -1.0, 1.0));
    const double azimuth = golden * double(k);
    const BallPoint d{std::cos(0.5 * polar), std::polar(std::sin(0.5 * polar), azimuth)};
    dirs.push_back(rot.apply(d));
  }
  return dirs;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("LINEXT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BundleReport bundle_test(const BoundaryFunction& f, const std::vector<BallPoint>& vertices, const BundleOptions& opt) {
  if (vertices.empty()) throw UsageError("bundle_test: empty vertex list");
  if (opt.lines_per_vertex < 1) throw UsageError("bundle_test: lines_per_vertex must be >= 1");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i].z1) || !is_finite(vertices[i].z2) || !vertices[i].interior())
      throw DomainError("bundle_test: vertices must lie in the open ball");
    for (std::size_t j = 0; j < i; ++j)
      if ((vertices[i] - vertices[j]).norm() <= kGeomEps) throw UsageError("bundle_test: vertices must be pairwise distinct");
  }

  const std::vector<BallPoint> dirs = sample_directions(opt.lines_per_vertex, opt.seed);
  std::vector<ComplexLine> lines;
  for (const BallPoint& v : vertices)
    for (const BallPoint& d : dirs) lines.push_back(ComplexLine::make(v, d));

  MomentOptions mopt = opt.moments;
  mopt.pole_budget = 0;
  if (mopt.n == 0) mopt.n = default_nodes(f);

  BundleReport out;
  out.vertices = vertices;
  out.lines_per_vertex = opt.lines_per_vertex;
  out.seed = opt.seed;
  out.collinear = complex_collinear(vertices);
  out.reports.resize(lines.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads ? opt.threads : default_thread_count(),
                                                           static_cast<unsigned>(lines.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
      if (failed.load()) return;
      try {
        out.reports[i] = line_extension_residuals(f, lines[i], mopt);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const MomentReport& a, const MomentReport& b) { return a.line.key() < b.line.key(); });
  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    out.verdict = combine(out.verdict, out.reports[i].verdict);
    if (out.reports[i].max_residual > out.reports[out.worst].max_residual) out.worst = i;
  }
  return out;
}

}  // namespace linext
