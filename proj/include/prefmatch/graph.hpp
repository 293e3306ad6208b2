#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prefmatch {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
    NodeId tail = 0;
    NodeId head = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple directed graph (self-loops allowed, parallel edges not).
///
/// Nodes are dense indices 0..N-1, each carrying a unique string label. Out-
/// and in-adjacency are stored in CSR form; neighbor lists keep edge order.
class DirectedGraph {
public:
    /// Throws UsageError when there are no nodes, a label repeats, an endpoint
    /// is out of range, or an edge appears twice.
    DirectedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Graph whose labels are the decimal node indices.
    static DirectedGraph with_index_labels(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const std::string> labels() const { return labels_; }

    std::span<const NodeId> out_neighbors(NodeId u) const;
    std::span<const NodeId> in_neighbors(NodeId v) const;

    std::size_t out_degree(NodeId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
    std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
    /// Total degree, in + out. A self-loop contributes 2.
    std::size_t degree(NodeId v) const { return in_degree(v) + out_degree(v); }

    const std::string& label(NodeId v) const { return labels_[v]; }
    std::optional<NodeId> find(std::string_view label) const;

    bool has_edge(NodeId tail, NodeId head) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_;
    std::vector<NodeId> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<NodeId> in_sources_;
    std::unordered_map<std::string, NodeId> index_;
};

struct ParsedGraph {
    DirectedGraph graph;
    std::size_t duplicate_edges = 0;
};

/// Reads "tail head" lines. '#' and '%' start comment lines, blank lines are
/// skipped. Labels are interned in order of first appearance; repeated edges
/// collapse to one and are tallied. Throws IngestionError on malformed lines
/// or when no node is found.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);

/// Serializes to the edge-list format, one edge per line in edge order.
/// Each header line is written as a "# " comment before the edges.
std::string to_edge_list(const DirectedGraph& graph, std::span<const std::string> header = {});

struct NodeDegree {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t total = 0;
};

using DegreeView = std::vector<NodeDegree>;

DegreeView degrees(const DirectedGraph& graph);

/// <k> = 2L / N.
double average_degree(const DirectedGraph& graph);

}  // namespace prefmatch
