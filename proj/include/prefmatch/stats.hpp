#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prefmatch/generators.hpp"
#include "prefmatch/graph.hpp"

namespace prefmatch {

struct MdsResult;

/// Fraction of edges whose tail has strictly larger total degree than its
/// head. Equal-degree edges count only in the denominator. Throws
/// StatisticError on an edgeless graph.
double f_hi_lo(const DirectedGraph& graph);

/// Mean total degree over `nodes`. Throws UsageError if `nodes` is empty.
double avg_degree_of(const DirectedGraph& graph, std::span<const NodeId> nodes);

struct DegreeBin {
    std::size_t degree = 0;
    std::size_t population = 0;  // nodes with this total degree
    std::size_t drivers = 0;      // of which are in the MDS
};

struct DegreeSplit {
    std::size_t low_population = 0;   // degree <= threshold
    std::size_t low_drivers = 0;
    std::size_t high_population = 0;  // degree > threshold
    std::size_t high_drivers = 0;
};

struct DegreeHistogram {
    std::vector<DegreeBin> bins;  // ascending degree, only degrees that occur

    std::size_t total_drivers() const;
    DegreeSplit split_at(std::size_t threshold) const;
};

DegreeHistogram driver_degree_histogram(const DirectedGraph& graph, const MdsResult& mds);

struct SweepRow {
    double knob = 0.0;  // p or R
    double f_hi_lo = 0.0;
    double mean_kd = 0.0;
    double avg_degree = 0.0;
    double ratio = 0.0;  // mean_kd / avg_degree
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// One row per p: a directed BA graph (base params with p replaced, seed set
/// to `seed`), its f_hi-lo, and `samples` random MDSs. Every row reuses the
/// same seed, so rows differ only in edge orientation.
std::vector<SweepRow> sweep_p(std::span<const double> grid, const BaParams& base,
                              std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// One row per R: reverse_edges on `graph`, then `samples` random MDSs
/// seeded with `seed`. The reversal stream is shared by all rows, so the
/// edges flipped at a smaller R are a subset of those flipped at a larger R.
std::vector<SweepRow> sweep_r(const DirectedGraph& graph, std::span<const double> grid,
                              std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// Seed of the reversal stream used by sweep_r.
std::uint64_t sweep_reversal_seed(std::uint64_t seed);

/// Pearson correlation coefficient. Throws StatisticError on fewer than two
/// points, mismatched lengths, or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace prefmatch
