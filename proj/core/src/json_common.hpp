// Internal: nlohmann-typed converters shared by json_io.cpp and report.cpp.
// The vendored header stays out of the installed public interface.
#pragma once

#include "json.hpp"

#include "cuspscan/anomaly.hpp"
#include "cuspscan/potential.hpp"

namespace cusp::detail {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text, const std::string& where);
Json load_file(const std::string& path);

SubgroupSpec subgroup_from_json(const Json& j, const std::string& where);
Json subgroup_to_json(const SubgroupSpec& h);

PotentialSeries potential_from_json(const Json& j, const std::string& where);
Json potential_to_json(const PotentialSeries& phi);

PairFamily pair_family_from_json(const Json& j, const std::string& where);
Json pair_family_to_json(const PairFamily& f);

Json anomaly_report_to_json(const AnomalyReport& r);

/// Canonical document rendering: 2-space indent, trailing newline.
std::string dump_document(const Json& j);

}  // namespace cusp::detail
