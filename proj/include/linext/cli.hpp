#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linext/report.hpp"

namespace linext {

/// Everything a subcommand needs.  Zero for nodes and tol selects the
/// command's default; nu = -1 in disc-test uses the function's own order.
struct RunConfig {
  std::string command;
  std::string function;
  std::vector<BallPoint> vertices;
  std::size_t lines = 200;
  std::size_t nodes = 0;
  int m_max = 32;
  double tol = 0.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  int nu_max = 16;
  int spec_nu = 4;  // charspec-roundtrip: largest nu of the random spec
  int degree = 4;
  int levels = 9;
  int angles = 8;
  int l_max = 16;
  std::vector<Complex> centers;
  int nu = -1;
  int radii = 8;
  bool fit = false;
  int points = 10;
  std::string out;
  std::string format = "json";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Thrown by parse_config for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "a+bi,c; d,e+fi" -> {(a+bi, c), (d, e+fi)}.  UsageError when malformed.
std::vector<BallPoint> parse_vertices(const std::string& text);
std::string format_vertices(const std::vector<BallPoint>& v);
/// "a+bi; c" -> {a+bi, c}.
std::vector<Complex> parse_complex_list(const std::string& text);
std::string format_complex_list(const std::vector<Complex>& v);

/// Parses arguments after the program name.  UsageError on anything
/// CLI11 rejects or a malformed list.
RunConfig parse_config(const std::vector<std::string>& args);
/// Inverse of parse_config: the arguments that reproduce `cfg`.
std::vector<std::string> to_args(const RunConfig& cfg);
Json to_json(const RunConfig& cfg);

/// Runs a parsed config; the envelope carries verdict and reports.
ReportEnvelope execute(const RunConfig& cfg);

int exit_code(Verdict v);

/// Whole front end: parse, execute, write.  Exit codes 0 pass, 1 fail,
/// 2 usage or config error, 3 inconclusive.
int run(const std::vector<std::string>& args);

}  // namespace linext
