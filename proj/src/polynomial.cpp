#include "linext/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

namespace linext {

Polynomial Polynomial::monomial(int degree, Complex a) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex(0.0));
  c.back() = a;
  return Polynomial(std::move(c));
}

int Polynomial::degree(double tol) const {
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    if (std::abs(c_[k]) > tol) return k;
  return -1;
}

Polynomial Polynomial::shifted(Complex a) const {
  // Repeated synthetic division by (z - a).
  std::vector<Complex> work = c_, out;
  const int n = static_cast<int>(work.size());
  out.reserve(work.size());
  for (int k = 0; k < n; ++k) {
    for (int i = n - 2; i >= k; --i) work[i] += a * work[i + 1];
    out.push_back(work[k]);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

BallPolynomial::BallPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

Complex BallPolynomial::operator()(const BallPoint& z) const {
  const std::array<Complex, 4> v{z.z1, z.z2, std::conj(z.z1), std::conj(z.z2)};
  Complex sum = 0.0;
  for (const Term& t : terms_) {
    Complex m = t.coeff;
    for (int s = 0; s < 4; ++s)
      for (int p = 0; p < t.exp[s]; ++p) m *= v[s];
    sum += m;
  }
  return sum;
}

bool BallPolynomial::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp[2] == 0 && t.exp[3] == 0; });
}

int BallPolynomial::total_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exp[0] + t.exp[1] + t.exp[2] + t.exp[3]);
  return d;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(out);
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

class PolyParser {
public:
  PolyParser(std::string text, const std::vector<std::string>& vars) : s_(std::move(text)), vars_(vars) {
    order_.resize(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return vars[a].size() > vars[b].size(); });
  }

  std::vector<std::pair<std::vector<int>, Complex>> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::map<std::vector<int>, Complex> acc;
    bool first = true;
    while (pos_ < s_.size() || first) {
      double sign = 1.0;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exps, coeff] = term();
      acc[exps] += sign * coeff;
    }
    std::vector<std::pair<std::vector<int>, Complex>> out;
    for (auto& [e, c] : acc)
      if (c != Complex(0.0)) out.emplace_back(e, c);
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("polynomial '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  bool at_number() const {
    return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.');
  }

  std::string_view number_text() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return std::string_view(s_).substr(start, pos_ - start);
  }

  int var_at() const {
    for (std::size_t idx : order_)
      if (s_.compare(pos_, vars_[idx].size(), vars_[idx]) == 0) return static_cast<int>(idx);
    return -1;
  }

  std::pair<std::vector<int>, Complex> term() {
    Complex coeff = 1.0;
    bool have_coeff = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coeff = parse_complex(std::string_view(s_).substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      have_coeff = true;
    } else if (at_number()) {
      double x = 0.0;
      if (!parse_double(number_text(), x)) fail("bad number");
      coeff = x;
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        coeff = Complex(0.0, x);
        ++pos_;
      }
      have_coeff = true;
    } else if (pos_ < s_.size() && s_[pos_] == 'i' && var_at() < 0) {
      coeff = Complex(0.0, 1.0);
      ++pos_;
      have_coeff = true;
    }
    std::vector<int> exps(vars_.size(), 0);
    bool have_factor = false;
    while (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-') {
      if (s_[pos_] == '*') {
        if (!have_coeff && !have_factor) fail("dangling '*'");
        ++pos_;
      }
      const int v = var_at();
      if (v < 0) fail("unknown symbol");
      pos_ += vars_[v].size();
      int power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("missing exponent");
        power = std::stoi(s_.substr(start, pos_ - start));
      }
      exps[v] += power;
      have_factor = true;
    }
    if (!have_coeff && !have_factor) fail("empty term");
    return {exps, coeff};
  }

  std::string s_;
  const std::vector<std::string>& vars_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
};

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  auto bad = [&]() { return UsageError("malformed complex literal '" + s + "'"); };
  if (s.empty()) throw bad();
  if (s.back() != 'i') {
    double x = 0.0;
    if (!parse_double(s, x)) throw bad();
    return {x, 0.0};
  }
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = s.substr(split == std::string::npos ? 0 : split, s.size() - 1 - (split == std::string::npos ? 0 : split));
  double re = 0.0, im = 0.0;
  if (!re_text.empty() && !parse_double(re_text, re)) throw bad();
  if (im_text.empty() || im_text == "+") im = 1.0;
  else if (im_text == "-") im = -1.0;
  else if (!parse_double(im_text, im)) throw bad();
  return {re, im};
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  out += (std::signbit(im) ? "-" : "+");
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

std::vector<std::pair<std::vector<int>, Complex>> parse_polynomial(std::string_view text,
                                                                  const std::vector<std::string>& vars) {
  return PolyParser(strip_spaces(text), vars).parse();
}

BallPolynomial parse_ball_polynomial(std::string_view text, bool allow_conjugates) {
  static const std::vector<std::string> vars{"z1", "z2", "z1b", "z2b"};
  std::vector<BallPolynomial::Term> terms;
  for (auto& [e, c] : parse_polynomial(text, vars)) {
    if (!allow_conjugates && (e[2] != 0 || e[3] != 0))
      throw UsageError("polynomial '" + std::string(text) + "': conjugate variables not allowed here");
    terms.push_back({{e[0], e[1], e[2], e[3]}, c});
  }
  return BallPolynomial(std::move(terms));
}

std::string BallPolynomial::to_string() const {
  static const char* names[4] = {"z1", "z2", "z1b", "z2b"};
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    out += (out.empty() ? "(" : "+(") + format_complex(t.coeff) + ")";
    for (int s = 0; s < 4; ++s) {
      if (t.exp[s] == 0) continue;
      out += std::string("*") + names[s];
      if (t.exp[s] > 1) out += "^" + std::to_string(t.exp[s]);
    }
  }
  return out;
}

}  // namespace linext
