#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "prefmatch/graph.hpp"
#include "prefmatch/matching.hpp"
#include "prefmatch/node_order.hpp"

namespace prefmatch {

/// A minimum driver node set together with the maximum matching it came from.
struct MdsResult {
    std::vector<NodeId> drivers;  // ascending node index
    std::size_t n_d = 0;
    double lambda_d = 0.0;        // n_d / N
    double avg_degree_d = 0.0;    // mean total degree over drivers
    bool perfect_matching = false;
    Matching witness;
};

/// Drivers of a maximum matching: the nodes whose in-role is unmatched, so
/// n_D = max(N - |M*|, 1). For a perfect matching the first node of `order`
/// is designated and `perfect_matching` is set. Throws ValidationError if
/// `matching` is not a maximum matching of `graph`.
MdsResult extract_drivers(const DirectedGraph& graph, Matching matching, const NodeOrder& order);

/// Preferential matching. The first `m` nodes of `order` are admitted one at
/// a time with the matching kept maximum on the admitted subgraph; the rest
/// are then admitted together and the matching completed. Nodes late in the
/// order tend to stay unmatched and become drivers. m = 0 is plain
/// max_matching. Throws UsageError if m > N.
MdsResult preferential_mds(const DirectedGraph& graph, const NodeOrder& order, std::size_t m);

/// One randomized MDS: uniformly random node order plus independently
/// shuffled neighbor scans, all drawn from `seed`.
MdsResult random_mds(const DirectedGraph& graph, std::uint64_t seed);

struct SampleOptions {
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    bool dedupe = false;
    /// Keep every MdsResult (memory grows with count * N).
    bool keep_results = false;
    unsigned threads = 1;
};

struct SampleSummary {
    std::size_t sample_count = 0;
    std::size_t n_d = 0;
    double mean_kd = 0.0;
    double min_kd = 0.0;
    double max_kd = 0.0;
    std::optional<std::size_t> distinct_driver_sets;  // set when deduplicating
};

struct SampleSet {
    SampleSummary summary;
    std::vector<double> kd;          // <k^D> of sample i
    std::vector<bool> duplicate;     // sample i repeats an earlier driver set (dedupe only)
    std::vector<MdsResult> results;  // only with keep_results
};

/// Draws `count` random MDSs. Sample i uses derive_seed(seed, i), so the
/// output does not depend on the thread count. Throws UsageError if count is
/// zero, ValidationError if two samples disagree on n_D.
SampleSet sample_mds(const DirectedGraph& graph, const SampleOptions& options);

}  // namespace prefmatch
