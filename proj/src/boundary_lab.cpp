#include "linext/boundary_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "linext/spectral.hpp"

namespace linext {

using nlohmann::json;

const char* to_string(Family f) {
  switch (f) {
    case Family::holomorphic_poly: return "holomorphic_poly";
    case Family::modulus_sq: return "modulus_sq";
    case Family::globevnik: return "globevnik";
    case Family::characterized: return "characterized";
    case Family::custom: return "custom";
  }
  return "?";
}

void CharacterizedSpec::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const CharacterizedTerm& t : terms) {
    if (!admissible(t.nu, t.j))
      throw UsageError("characterized spec: term (nu=" + std::to_string(t.nu) + ", j=" + std::to_string(t.j) +
                       ") violates 2j < nu");
    if (!seen.insert({t.nu, t.j}).second)
      throw UsageError("characterized spec: duplicate term (nu=" + std::to_string(t.nu) + ", j=" + std::to_string(t.j) + ")");
    for (const Complex& c : t.h.coeffs())
      if (!is_finite(c)) throw UsageError("characterized spec: non-finite coefficient");
  }
}

int CharacterizedSpec::max_nu() const {
  int m = 0;
  for (const auto& t : terms) m = std::max(m, t.nu);
  return m;
}

int CharacterizedSpec::max_degree() const {
  int m = 0;
  for (const auto& t : terms) m = std::max(m, static_cast<int>(t.h.coeffs().size()) - 1);
  return m;
}

Polynomial CharacterizedSpec::term(int nu, int j) const {
  for (const auto& t : terms)
    if (t.nu == nu && t.j == j) return t.h;
  return {};
}

CharacterizedSpec CharacterizedSpec::random(std::uint64_t seed, int nu_max, int degree) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CharacterizedSpec spec;
  for (int nu = 0; nu <= nu_max; ++nu) {
    for (int j = 0; admissible(nu, j); ++j) {
      std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
      for (Complex& x : c) x = {u(rng), u(rng)};
      spec.terms.push_back({nu, j, Polynomial(std::move(c))});
    }
  }
  return spec;
}

namespace {

Complex json_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_string()) return parse_complex(v.get<std::string>());
  throw UsageError("characterized spec: coefficient must be a number, [re, im] or a complex literal");
}

}  // namespace

CharacterizedSpec CharacterizedSpec::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("characterized spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw UsageError("characterized spec: expected an object with a 'terms' array");
  CharacterizedSpec spec;
  for (const json& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("nu") || !t.contains("j") || !t.contains("h") || !t["h"].is_array() ||
        !t["nu"].is_number_integer() || !t["j"].is_number_integer())
      throw UsageError("characterized spec: each term needs integer 'nu', 'j' and an 'h' array");
    std::vector<Complex> c;
    for (const json& x : t["h"]) c.push_back(json_complex(x));
    spec.terms.push_back({t["nu"].get<int>(), t["j"].get<int>(), Polynomial(std::move(c))});
  }
  spec.validate();
  return spec;
}

std::string CharacterizedSpec::to_json_text() const {
  json terms_json = json::array();
  for (const auto& t : terms) {
    json h = json::array();
    for (const Complex& c : t.h.coeffs()) h.push_back({c.real(), c.imag()});
    terms_json.push_back({{"nu", t.nu}, {"j", t.j}, {"h", h}});
  }
  return json{{"terms", terms_json}}.dump(2);
}

BoundaryFunction::BoundaryFunction(Family family, std::string description, Evaluator eval, Smoothness smooth,
                                   SingularSet singular)
    : family_(family),
      description_(std::move(description)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))),
      smooth_(smooth),
      singular_(singular) {}

BoundaryFunction BoundaryFunction::composed(const Unitary& u) const {
  auto inner_eval = eval_;
  return BoundaryFunction(Family::custom, description_ + " o U", [inner_eval, u](const BallPoint& z) { return (*inner_eval)(u.apply(z)); },
                          smooth_, SingularSet::empty);
}

BoundaryFunction make_holomorphic_poly(BallPolynomial p) {
  if (!p.is_holomorphic()) throw UsageError("holomorphic polynomial may not contain conjugate variables");
  std::string desc = "poly:" + p.to_string();
  return BoundaryFunction(Family::holomorphic_poly, std::move(desc), [p = std::move(p)](const BallPoint& z) { return p(z); },
                          Smoothness::analytic());
}

BoundaryFunction make_real_analytic_poly(BallPolynomial p) {
  std::string desc = "rpoly:" + p.to_string();
  return BoundaryFunction(Family::custom, std::move(desc), [p = std::move(p)](const BallPoint& z) { return p(z); },
                          Smoothness::analytic());
}

BoundaryFunction make_modulus_sq() {
  return BoundaryFunction(Family::modulus_sq, "modsq", [](const BallPoint& z) { return Complex(std::norm(z.z1)); },
                          Smoothness::analytic());
}

BoundaryFunction make_globevnik(int k) {
  if (k < 2) throw UsageError("globevnik: k must be >= 2 for continuity on {z2 = 0}");
  auto eval = [k](const BallPoint& z) -> Complex {
    if (z.z2 == Complex(0.0)) return 0.0;
    Complex p = 1.0;
    for (int i = 0; i < k; ++i) p *= z.z2;
    return p / std::conj(z.z2);
  };
  return BoundaryFunction(Family::globevnik, "globevnik:k=" + std::to_string(k), eval, Smoothness::finite(k - 2),
                          SingularSet::z2_zero);
}

BoundaryFunction make_characterized(CharacterizedSpec spec) {
  spec.validate();
  std::sort(spec.terms.begin(), spec.terms.end(),
            [](const auto& a, const auto& b) { return std::pair(a.nu, a.j) < std::pair(b.nu, b.j); });

  // Lowest nu - 2j over the non-holomorphic terms bounds the regularity.
  Smoothness smooth = Smoothness::analytic();
  bool singular = false;
  for (const auto& t : spec.terms) {
    if (t.j == 0 || t.h.is_zero()) continue;
    singular = true;
    const int order = std::max(0, t.nu - 2 * t.j - 1);
    if (smooth.kind == Smoothness::Kind::analytic || order < smooth.order) smooth = Smoothness::finite(order);
  }

  auto shared = std::make_shared<const CharacterizedSpec>(spec);
  auto eval = [shared](const BallPoint& z) -> Complex {
    const double r2 = std::norm(z.z2);
    Complex sum = 0.0;
    if (r2 == 0.0) {
      for (const auto& t : shared->terms)
        if (t.nu == 0) sum += t.h(z.z1);
      return sum;
    }
    Complex z2pow = 1.0;
    int pow_nu = 0;
    for (const auto& t : shared->terms) {
      while (pow_nu < t.nu) {
        z2pow *= z.z2;
        ++pow_nu;
      }
      sum += t.h(z.z1) * z2pow / std::pow(r2, t.j);
    }
    return sum;
  };
  BoundaryFunction f(Family::characterized, "charspec", eval, smooth,
                     singular ? SingularSet::z2_zero : SingularSet::empty);
  f.spec_ = std::move(shared);
  return f;
}

BoundaryFunction make_custom(std::string name, BoundaryFunction::Evaluator eval, Smoothness smooth) {
  return BoundaryFunction(Family::custom, std::move(name), std::move(eval), smooth);
}

BoundaryFunction parse_function_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "modsq" || head == "modulus_sq") {
    if (!body.empty()) throw UsageError("function '" + text + "': modsq takes no parameters");
    return make_modulus_sq();
  }
  if (head == "poly") return make_holomorphic_poly(parse_ball_polynomial(body, false));
  if (head == "rpoly") return make_real_analytic_poly(parse_ball_polynomial(body, true));
  if (head == "globevnik") {
    if (body.rfind("k=", 0) != 0) throw UsageError("function '" + text + "': expected globevnik:k=<int>");
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(body.substr(2), &used);
    } catch (const std::exception&) {
      throw UsageError("function '" + text + "': bad integer k");
    }
    if (used != body.size() - 2) throw UsageError("function '" + text + "': bad integer k");
    return make_globevnik(k);
  }
  if (head == "charspec") {
    std::ifstream in(body);
    if (!in) throw UsageError("function '" + text + "': cannot read spec file");
    std::stringstream ss;
    ss << in.rdbuf();
    BoundaryFunction f = make_characterized(CharacterizedSpec::from_json_text(ss.str()));
    return f;
  }
  throw UsageError("unknown function family '" + head + "'");
}

std::vector<Complex> evaluate_on_circle(const BoundaryFunction& f, const ComplexLine& line, std::size_t n) {
  if (!is_power_of_two(n) || n < 4) throw UsageError("evaluate_on_circle: node count must be a power of two >= 4");
  const LineBoundaryCircle circ = line_boundary_circle(line);
  const std::vector<double> th = uniform_angles(n);
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = f(line.at(circ.lambda0 + std::polar(circ.rho, th[j])));
  return out;
}

}  // namespace linext
