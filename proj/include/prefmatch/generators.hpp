#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "prefmatch/graph.hpp"

namespace prefmatch {

/// Directed Barabasi-Albert parameters. Requires n > m0 >= m_attach >= 1 and
/// 0 <= p <= 1.
struct BaParams {
    std::size_t n = 1000;
    std::size_t m_attach = 2;
    std::size_t m0 = 3;
    double p = 0.5;  // probability that a new edge points old -> new
    std::uint64_t seed = 1;

    /// "ba n=... m=... m0=... p=... seed=..."
    std::string describe() const;
};

/// Preferential-attachment growth from a directed cycle over m0 seed nodes.
/// Each new node picks m_attach distinct existing nodes with probability
/// proportional to total degree and orients each edge old -> new with
/// probability p, new -> old otherwise. L = m0 + (n - m0) * m_attach.
///
/// Attachment targets and orientations come from separate streams of the
/// same seed, so graphs that differ only in p share their undirected
/// topology.
DirectedGraph gen_directed_ba(const BaParams& params);

/// `l` distinct directed edges drawn uniformly from the n(n-1) non-loop
/// pairs. Throws UsageError if l exceeds n(n-1) or n is zero.
DirectedGraph gen_directed_er(std::size_t n, std::size_t l, std::uint64_t seed);

struct ReversalParams {
    double r = 0.0;
    std::uint64_t seed = 1;
};

struct ReversalResult {
    DirectedGraph graph;
    std::size_t reversed = 0;
    std::size_t skipped = 0;  // reversal would have duplicated an existing edge
};

/// Flips each edge u -> v with k_u < k_v (total degrees of the input graph)
/// with probability r. Edge positions and node labels are kept. Throws
/// UsageError if r is outside [0, 1].
ReversalResult reverse_edges(const DirectedGraph& graph, const ReversalParams& params);

}  // namespace prefmatch
