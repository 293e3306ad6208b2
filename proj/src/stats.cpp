#include "prefmatch/stats.hpp"

#include <cmath>
#include <map>

#include "prefmatch/errors.hpp"
#include "prefmatch/mds.hpp"
#include "prefmatch/random.hpp"

namespace prefmatch {

double f_hi_lo(const DirectedGraph& graph) {
    if (graph.edge_count() == 0) throw StatisticError("f_hi_lo is undefined without edges");
    std::size_t hi_lo = 0;
    for (const auto& e : graph.edges()) {
        if (graph.degree(e.tail) > graph.degree(e.head)) ++hi_lo;
    }
    return static_cast<double>(hi_lo) / static_cast<double>(graph.edge_count());
}

double avg_degree_of(const DirectedGraph& graph, std::span<const NodeId> nodes) {
    if (nodes.empty()) throw UsageError("average degree of an empty node set");
    std::size_t sum = 0;
    for (NodeId v : nodes) sum += graph.degree(v);
    return static_cast<double>(sum) / static_cast<double>(nodes.size());
}

std::size_t DegreeHistogram::total_drivers() const {
    std::size_t total = 0;
    for (const auto& bin : bins) total += bin.drivers;
    return total;
}

DegreeSplit DegreeHistogram::split_at(std::size_t threshold) const {
    DegreeSplit split;
    for (const auto& bin : bins) {
        if (bin.degree <= threshold) {
            split.low_population += bin.population;
            split.low_drivers += bin.drivers;
        } else {
            split.high_population += bin.population;
            split.high_drivers += bin.drivers;
        }
    }
    return split;
}

DegreeHistogram driver_degree_histogram(const DirectedGraph& graph, const MdsResult& mds) {
    std::map<std::size_t, DegreeBin> bins;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        auto& bin = bins[graph.degree(v)];
        bin.degree = graph.degree(v);
        ++bin.population;
    }
    for (NodeId v : mds.drivers) {
        if (v >= graph.node_count()) throw UsageError("driver is not a node of the graph");
        ++bins[graph.degree(v)].drivers;
    }
    DegreeHistogram hist;
    hist.bins.reserve(bins.size());
    for (const auto& [k, bin] : bins) hist.bins.push_back(bin);
    return hist;
}

namespace {

SweepRow make_row(const DirectedGraph& graph, double knob, std::size_t samples,
                  std::uint64_t seed, unsigned threads) {
    SampleOptions options;
    options.count = samples;
    options.seed = seed;
    options.threads = threads;
    auto set = sample_mds(graph, options);

    SweepRow row;
    row.knob = knob;
    row.f_hi_lo = f_hi_lo(graph);
    row.mean_kd = set.summary.mean_kd;
    row.avg_degree = average_degree(graph);
    row.ratio = row.mean_kd / row.avg_degree;
    row.samples = samples;
    row.seed = seed;
    return row;
}

void check_grid(std::span<const double> grid) {
    for (double v : grid) {
        if (!(v >= 0.0 && v <= 1.0)) throw UsageError("grid values must lie in [0, 1]");
    }
}

}  // namespace

std::vector<SweepRow> sweep_p(std::span<const double> grid, const BaParams& base,
                              std::size_t samples, std::uint64_t seed, unsigned threads) {
    check_grid(grid);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        BaParams params = base;
        params.p = p;
        params.seed = seed;
        rows.push_back(make_row(gen_directed_ba(params), p, samples, seed, threads));
    }
    return rows;
}

std::uint64_t sweep_reversal_seed(std::uint64_t seed) {
    return derive_seed(seed, std::uint64_t{1} << 62);
}

std::vector<SweepRow> sweep_r(const DirectedGraph& graph, std::span<const double> grid,
                              std::size_t samples, std::uint64_t seed, unsigned threads) {
    check_grid(grid);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double r : grid) {
        auto reversed = reverse_edges(graph, {r, sweep_reversal_seed(seed)});
        rows.push_back(make_row(reversed.graph, r, samples, seed, threads));
    }
    return rows;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw StatisticError("pearson needs two equally long series of length >= 2");
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw StatisticError("pearson is undefined for constant series");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace prefmatch
