#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prefmatch/graph.hpp"

namespace prefmatch {

enum class OrderKind { DegreeAscending, DegreeDescending, Random, Explicit };

/// A permutation of all nodes giving each node a rank (position).
///
/// Degree-keyed orders sort by total degree and break ties by node index,
/// ascending, for both directions.
class NodeOrder {
public:
    static NodeOrder degree_ascending(const DirectedGraph& graph);
    static NodeOrder degree_descending(const DirectedGraph& graph);
    static NodeOrder random(const DirectedGraph& graph, std::uint64_t seed);
    /// Throws UsageError unless `sequence` is a permutation of the graph's nodes.
    static NodeOrder explicit_order(const DirectedGraph& graph, std::vector<NodeId> sequence);

    OrderKind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }

    std::span<const NodeId> sequence() const { return sequence_; }
    std::size_t size() const { return sequence_.size(); }
    NodeId at(std::size_t position) const { return sequence_[position]; }
    std::size_t rank(NodeId v) const { return rank_[v]; }

    /// "asc", "desc", "random" or "explicit".
    std::string name() const;

private:
    NodeOrder(OrderKind kind, std::vector<NodeId> sequence, std::uint64_t seed = 0);

    OrderKind kind_;
    std::uint64_t seed_;
    std::vector<NodeId> sequence_;
    std::vector<std::size_t> rank_;
};

}  // namespace prefmatch
