#pragma once

#include <vector>

#include "cuspscan/anomaly.hpp"
#include "cuspscan/potential.hpp"

namespace cusp {

/// Exhaustive subgroup scan over a coefficient box. Subgroups are taken up
/// to identity component: each raw relation matrix is canonicalized to the
/// saturation of its row lattice (in HNF) before dedup and classification,
/// since the log-level intersection only sees the component through the
/// identity.
struct ScanConfig {
  int n = 0;
  int codim_min = 1;
  int codim_max = 1;
  long max_coeff = 1;
  CoeffMode mode = CoeffMode::Symbolic;
  std::vector<Rat> tau;  // rational mode: one value per cusp
  int truncation = 8;    // echoed into reports
  int jobs = 1;

  static constexpr double kMaxBoxSize = 2.5e8;
  static constexpr int kMaxSymbolicCusps = 16;
};

struct ScanOutcome {
  std::vector<AnomalyReport> reports;  // canonical order: codim, then lex rel
  long long raw_enumerated = 0;
  long long unique_lattices = 0;
  long long anomalous = 0;
  long long counterexamples = 0;
};

/// Estimated raw enumeration size of the box (sum over the codim range).
double scan_box_estimate(const ScanConfig& cfg);

/// Runs the scan; results are byte-for-byte independent of cfg.jobs.
/// Throws InputError when the box exceeds kMaxBoxSize or the config is
/// malformed.
ScanOutcome run_scan(const ScanConfig& cfg);

}  // namespace cusp
