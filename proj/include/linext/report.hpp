#pragma once

#include <string>

#include "json.hpp"
#include "linext/decomposition.hpp"
#include "linext/disc_analysis.hpp"
#include "linext/moments.hpp"

namespace linext {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Complex numbers serialize as [re, im].
Json to_json(Complex z);
Json to_json(const BallPoint& z);
Json to_json(const ComplexLine& line);
Json to_json(const MomentReport& r);
Json to_json(const SliceGrid& g);
Json to_json(const RadialCoeffs& c);
Json to_json(const CircleExtensionReport& r, int budget);
Json to_json(const FamilyReport& r);
Json to_json(const PolyanalyticFunction& f);
Json to_json(const PolyanalyticFit& f);

/// Top-level layout shared by every subcommand.
struct ReportEnvelope {
  std::string command;
  Json config_echo = Json::object();
  Verdict verdict = Verdict::pass;
  Json reports = Json::array();
  Json worst_offender = nullptr;
  Json summary = Json::object();
  double runtime_ms = 0.0;
  std::string csv;  // flat table written by --format csv
};

Json to_json(const ReportEnvelope& e);

/// The report minus runtime_ms: equal for equal configs.
Json comparison_body(const Json& report);

/// One row per (line, m): line,m,residual,verdict.
std::string residuals_csv(const BundleReport& b);
/// One row per (node, nu): z1_re,z1_im,r,nu,re,im.
std::string slices_csv(const SliceGrid& g);
/// One row per (circle, m): circle,e_re,e_im,t,m,abs.
std::string family_csv(const FamilyReport& f);

/// Structural check against the shipped schema's required layout; returns
/// an empty string when valid, else the first problem found.
std::string validate_report(const Json& report);

}  // namespace linext
