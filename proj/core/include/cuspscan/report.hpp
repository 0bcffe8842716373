#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspscan/scan.hpp"
#include "cuspscan/theta.hpp"

namespace cusp {

inline constexpr const char* kToolName = "cuspscan";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Json, Text };

/// Reports are deterministic: identical findings render to identical bytes,
/// and nothing execution-dependent (timing, parallelism width) is echoed.

struct CheckFindings {
  CoeffMode mode = CoeffMode::Symbolic;
  AnomalyReport report;
};

struct IsolationFindings {
  int n = 0;
  int truncation = 0;
  std::vector<CuspSupport> sgi;  // proper nonempty sets that are SGI from the rest
  struct Wgi {
    CuspSupport a, b, c;
  };
  std::vector<Wgi> wgi;  // triples with A WGI from B keeping C complete
};

struct ThetaFindings {
  ThetaFit fit;
  int t_count = 0;
  bool t_independent = false;
};

struct TwoCuspFindings {
  long a = 0, b = 0, c = 0, d = 0;
  bool holds = false;
  int truncation = 0;
};

struct ParityFindings {
  bool branch_parity = false;
  bool mixed_partials = false;
  int truncation = 0;
};

struct DeficientFindings {
  std::string method;  // "brute", "constructive" or "both"
  int n = 0;
  bool vacuous = false;  // n == 1: no proper nonempty subset exists
  bool hypothesis = false;
  /// Witnessing independent selection when the hypothesis fails
  /// (0 = v_i, 1 = w_i).
  std::optional<std::vector<int>> witness;
  std::optional<DeficientSubset> brute;
  std::optional<DeficientSubset> constructive;
  std::optional<bool> both_valid;  // method "both": both outputs pass validity
};

std::string render_check_report(const CheckFindings& f, OutputFormat fmt);
std::string render_scan_report(const ScanOutcome& o, const ScanConfig& cfg, OutputFormat fmt);
std::string render_isolation_report(const IsolationFindings& f, OutputFormat fmt);
std::string render_theta_report(const ThetaFindings& f, OutputFormat fmt);
std::string render_two_cusp_report(const TwoCuspFindings& f, OutputFormat fmt);
std::string render_parity_report(const ParityFindings& f, OutputFormat fmt);
std::string render_deficient_report(const DeficientFindings& f, OutputFormat fmt);

/// Enumerate all SGI splits and WGI triples of a potential (n <= 5 keeps the
/// partition scan honest).
IsolationFindings isolation_scan(const PotentialSeries& phi);

}  // namespace cusp
