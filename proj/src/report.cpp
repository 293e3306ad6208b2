#include "prefmatch/report.hpp"

#include <charconv>

namespace prefmatch {

std::string format_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += format_double(r.knob) + ',' + format_double(r.f_hi_lo) + ',' +
               format_double(r.mean_kd) + ',' + format_double(r.avg_degree) + ',' +
               format_double(r.ratio) + ',' + std::to_string(r.samples) + ',' +
               std::to_string(r.seed) + '\n';
    }
    return out;
}

nlohmann::json sweep_json(std::span<const SweepRow> rows) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"knob", r.knob},
                       {"f_hi_lo", r.f_hi_lo},
                       {"mean_kd", r.mean_kd},
                       {"avg_degree", r.avg_degree},
                       {"ratio", r.ratio},
                       {"samples", r.samples},
                       {"seed", r.seed}});
    }
    return out;
}

nlohmann::json histogram_json(const DegreeHistogram& histogram) {
    auto out = nlohmann::json::object();
    for (const auto& bin : histogram.bins) {
        out[std::to_string(bin.degree)] = {{"population", bin.population},
                                           {"drivers", bin.drivers}};
    }
    return out;
}

std::string histogram_csv(const DegreeHistogram& histogram) {
    std::string out = "degree,population,drivers\n";
    for (const auto& bin : histogram.bins) {
        out += std::to_string(bin.degree) + ',' + std::to_string(bin.population) + ',' +
               std::to_string(bin.drivers) + '\n';
    }
    return out;
}

nlohmann::json mds_json(const DirectedGraph& graph, const MdsResult& mds) {
    auto drivers = nlohmann::json::array();
    for (NodeId v : mds.drivers) drivers.push_back(graph.label(v));
    auto witness = nlohmann::json::array();
    for (const auto& [u, v] : mds.witness.pairs())
        witness.push_back(nlohmann::json::array({graph.label(u), graph.label(v)}));
    return {{"n_d", mds.n_d},
            {"lambda_d", mds.lambda_d},
            {"avg_degree_d", mds.avg_degree_d},
            {"perfect_matching", mds.perfect_matching},
            {"matching_size", mds.witness.size()},
            {"drivers", std::move(drivers)},
            {"witness", std::move(witness)}};
}

nlohmann::json summary_json(const SampleSummary& summary) {
    nlohmann::json out = {{"sample_count", summary.sample_count},
                          {"n_d", summary.n_d},
                          {"mean_kd", summary.mean_kd},
                          {"min_kd", summary.min_kd},
                          {"max_kd", summary.max_kd}};
    if (summary.distinct_driver_sets) out["distinct_driver_sets"] = *summary.distinct_driver_sets;
    return out;
}

}  // namespace prefmatch
