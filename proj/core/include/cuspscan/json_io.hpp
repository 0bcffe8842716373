#pragma once

#include <string>

#include "cuspscan/anomaly.hpp"
#include "cuspscan/potential.hpp"

namespace cusp {

// File formats. All rationals travel as "p/q" strings ("p" when integral);
// cusp indices are 1-based.
//
// Subgroup: {"n": int, "rows": [[int,...]]} with 2n entries per row.
// Emission is the canonical HNF form produced by normalize().
//
// Potential: {"n": int, "D": int, "mode": "symbolic"|"rational",
//             "tau": ["p/q", ...]   (rational mode only),
//             "terms": [{"u": [ints], "coeff": <coeff>}, ...]}
// where <coeff> is "p/q" in rational mode and
// [{"tau_set": [ints], "q": "p/q"}, ...] in symbolic mode.
//
// Pair family: {"n": int, "pairs": [{"v": ["p/q",...], "w": [...]}, ...]}

SubgroupSpec parse_subgroup(const std::string& text, const std::string& where);
SubgroupSpec load_subgroup_file(const std::string& path);
std::string subgroup_to_json_text(const SubgroupSpec& h);

PotentialSeries parse_potential(const std::string& text, const std::string& where);
PotentialSeries load_potential_file(const std::string& path);
std::string potential_to_json_text(const PotentialSeries& phi);

PairFamily parse_pair_family(const std::string& text, const std::string& where);
PairFamily load_pair_family_file(const std::string& path);
std::string pair_family_to_json_text(const PairFamily& f);

std::string anomaly_report_to_json_text(const AnomalyReport& r);

}  // namespace cusp
