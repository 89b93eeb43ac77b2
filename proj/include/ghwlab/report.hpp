#ifndef GHWLAB_REPORT_HPP
#define GHWLAB_REPORT_HPP

#include "ghwlab/code.hpp"
#include "ghwlab/ghw.hpp"

#include <json.hpp>

#include <string>

namespace ghwlab {

using Json = nlohmann::ordered_json;

Json params_json(const DefiningSet& d);

/// {class, params, fields, size, elements}; elements are digit strings, pairs for bivariate sets.
Json defining_set_json(const DefiningSet& d);

/// {class, params, n, dim, d, weight_distribution}.
Json code_json(const CodeInstance& c, const WeightDistribution& wd);

/// Generator rows as digit strings, one per line.
std::string generator_text(const CodeInstance& c);

/// Timings are omitted when `deterministic` is set.
Json report_json(const HierarchyReport& rep, bool deterministic);

/// One row per r: r,d_support,d_dual,d_formula,agree.
std::string report_csv(const HierarchyReport& rep);

/// Human-readable table ending in "wt_1=..., wt_2=..." and the status line.
std::string report_table(const HierarchyReport& rep);

/// "{wt_1=a, wt_2=b, ...}"
std::string hierarchy_string(const std::vector<std::int64_t>& h);

}  // namespace ghwlab

#endif  // GHWLAB_REPORT_HPP
