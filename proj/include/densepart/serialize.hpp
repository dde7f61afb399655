#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "densepart/experiments.hpp"
#include "densepart/graph.hpp"
#include "densepart/pipeline.hpp"
#include "densepart/zero_free.hpp"

namespace densepart {

/// {mode, n, m, gamma, alpha, order_used, ln_den, certified_density, error_bound,
///  budget_limited, subset?}; absent optionals become null. Subsets are 1-based.
nlohmann::ordered_json to_json(const ApproxResult& res, const std::optional<SubsetDensity>& subset = std::nullopt);
nlohmann::ordered_json to_json(const ZeroFreeParams& params);
nlohmann::ordered_json to_json(const SubsetDensity& subset);
nlohmann::ordered_json to_json(const ZeroExperimentSummary& summary);
nlohmann::ordered_json to_json(const ZeroExperimentRecord& record, bool with_timing);
nlohmann::ordered_json to_json(const SweepRecord& record);

/// Shortest round-trip decimal form; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);

/// RFC-4180 field quoting.
std::string csv_field(std::string_view text);

void write_zero_csv(std::ostream& out, const std::vector<ZeroExperimentRecord>& records, bool with_timing);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace densepart
