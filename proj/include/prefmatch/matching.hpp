#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prefmatch/graph.hpp"
#include "prefmatch/node_order.hpp"
#include "prefmatch/random.hpp"

namespace prefmatch {

/// A matching in the bipartite out-role / in-role view of a directed graph:
/// a set of edges in which no two share a tail and no two share a head.
class Matching {
public:
    explicit Matching(std::size_t node_count = 0);

    /// Throws ValidationError if a tail or head repeats or is out of range.
    /// Whether the pairs are graph edges is checked by validate_matching.
    static Matching from_pairs(std::size_t node_count, std::span<const Edge> pairs);

    std::size_t node_count() const { return tail_to_head_.size(); }
    std::size_t size() const { return size_; }

    /// kNoNode when the role is unmatched.
    NodeId head_of(NodeId tail) const { return tail_to_head_[tail]; }
    NodeId tail_of(NodeId head) const { return head_to_tail_[head]; }

    bool tail_matched(NodeId tail) const { return tail_to_head_[tail] != kNoNode; }
    bool head_matched(NodeId head) const { return head_to_tail_[head] != kNoNode; }

    /// Matched pairs ordered by tail.
    std::vector<Edge> pairs() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    friend class MatchingState;

    std::vector<NodeId> tail_to_head_;
    std::vector<NodeId> head_to_tail_;
    std::size_t size_ = 0;
};

/// Throws ValidationError unless the matching belongs to `graph`: same node
/// count, every pair an edge, tail/head maps mutually inverse.
void validate_matching(const DirectedGraph& graph, const Matching& matching);

/// Berge check: true iff no augmenting path exists inside the subgraph induced
/// by `active`. Throws ValidationError if the matching is invalid or touches an
/// inactive node. This is a breadth-first search independent of MatchingState.
bool verify_maximum(const DirectedGraph& graph, const Matching& matching,
                    const std::vector<bool>& active);
bool verify_maximum(const DirectedGraph& graph, const Matching& matching);

/// Incrementally maintained maximum matching over a growing set of active
/// nodes.
///
/// Augmenting paths are found by depth-first search. Free out-roles are tried
/// in ascending rank and each out-role scans its in-role neighbors in
/// ascending rank, so low-rank in-roles get matched first. Once a role is
/// matched it stays matched.
///
/// The state keeps a reference to the graph, which must outlive it.
class MatchingState {
public:
    /// No node is active and the matching is empty.
    MatchingState(const DirectedGraph& graph, const NodeOrder& order);

    /// Every node active, starting from `initial`, which need not be maximum.
    /// Throws ValidationError if `initial` is not a matching of `graph`.
    MatchingState(const DirectedGraph& graph, const NodeOrder& order, Matching initial);

    /// Replaces the rank-ordered neighbor scan with an independent uniform
    /// permutation of every node's out-neighbors.
    void shuffle_neighbors(Rng& rng);

    const DirectedGraph& graph() const { return *graph_; }
    const Matching& matching() const { return matching_; }
    const std::vector<bool>& active() const { return active_; }
    std::size_t active_count() const { return active_count_; }
    bool is_active(NodeId v) const { return active_[v]; }

    /// Looks for an augmenting path from the unmatched out-role of
    /// `free_tail` to any unmatched active in-role and flips it. Returns false
    /// and leaves the matching untouched when there is none. Throws
    /// UsageError if `free_tail` is inactive or already matched.
    bool augment_from(NodeId free_tail);

    /// Admits `node` and restores maximality: first from the node's own
    /// out-role, then from the remaining free out-roles in ascending rank
    /// while the node's in-role can still be reached. Throws UsageError if
    /// `node` is already active.
    void extend_with_node(NodeId node);

    /// Admits every remaining node and augments from each free out-role in
    /// ascending rank, leaving a maximum matching of the whole graph.
    void complete();

    Matching release() && { return std::move(matching_); }

private:
    struct Frame {
        NodeId tail;
        std::size_t next;
        std::size_t end;
        NodeId chosen;
    };

    void activate(NodeId v);
    void next_stamp();
    bool search(NodeId free_tail);
    bool head_reachable_from_free_tail(NodeId head);

    const DirectedGraph* graph_;
    std::vector<NodeId> sequence_;
    std::vector<std::size_t> scan_offsets_;
    std::vector<NodeId> scan_targets_;
    Matching matching_;
    std::vector<bool> active_;
    std::size_t active_count_ = 0;

    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> back_mark_;
    std::uint32_t back_stamp_ = 0;
    std::vector<Frame> stack_;
    std::vector<NodeId> queue_;
};

/// Maximum matching of the whole graph under the rank discipline of `order`.
/// Deterministic given (graph, order).
Matching max_matching(const DirectedGraph& graph, const NodeOrder& order);

}  // namespace prefmatch
