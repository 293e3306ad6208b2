#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "prefmatch/graph.hpp"
#include "prefmatch/mds.hpp"
#include "prefmatch/stats.hpp"

namespace prefmatch {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

inline constexpr const char* kSweepCsvHeader = "knob,f_hi_lo,mean_kd,avg_degree,ratio,samples,seed";

/// Header line plus one line per row.
std::string sweep_csv(std::span<const SweepRow> rows);
nlohmann::json sweep_json(std::span<const SweepRow> rows);

/// Object keyed by degree value: {"3": {"population": 1, "drivers": 1}, ...}.
nlohmann::json histogram_json(const DegreeHistogram& histogram);
std::string histogram_csv(const DegreeHistogram& histogram);

/// Drivers and witness pairs are written as node labels.
nlohmann::json mds_json(const DirectedGraph& graph, const MdsResult& mds);
nlohmann::json summary_json(const SampleSummary& summary);

}  // namespace prefmatch
