#include "prefmatch/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "prefmatch/errors.hpp"

namespace prefmatch {

Matching::Matching(std::size_t node_count)
    : tail_to_head_(node_count, kNoNode), head_to_tail_(node_count, kNoNode) {}

Matching Matching::from_pairs(std::size_t node_count, std::span<const Edge> pairs) {
    Matching m(node_count);
    for (const auto& [tail, head] : pairs) {
        if (tail >= node_count || head >= node_count)
            throw ValidationError("matched pair out of range");
        if (m.tail_to_head_[tail] != kNoNode)
            throw ValidationError("tail " + std::to_string(tail) + " matched twice");
        if (m.head_to_tail_[head] != kNoNode)
            throw ValidationError("head " + std::to_string(head) + " matched twice");
        m.tail_to_head_[tail] = head;
        m.head_to_tail_[head] = tail;
        ++m.size_;
    }
    return m;
}

std::vector<Edge> Matching::pairs() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (NodeId u = 0; u < tail_to_head_.size(); ++u) {
        if (tail_to_head_[u] != kNoNode) out.push_back({u, tail_to_head_[u]});
    }
    return out;
}

void validate_matching(const DirectedGraph& graph, const Matching& matching) {
    const auto n = graph.node_count();
    if (matching.node_count() != n) throw ValidationError("matching/graph node count mismatch");
    std::size_t count = 0;
    for (NodeId u = 0; u < n; ++u) {
        NodeId v = matching.head_of(u);
        if (v == kNoNode) continue;
        if (v >= n || matching.tail_of(v) != u)
            throw ValidationError("tail and head maps are not inverse");
        if (!graph.has_edge(u, v))
            throw ValidationError("matched pair " + graph.label(u) + " -> " + graph.label(v) +
                                  " is not an edge");
        ++count;
    }
    for (NodeId v = 0; v < n; ++v) {
        NodeId u = matching.tail_of(v);
        if (u != kNoNode && (u >= n || matching.head_of(u) != v))
            throw ValidationError("tail and head maps are not inverse");
    }
    if (count != matching.size()) throw ValidationError("matching size is inconsistent");
}

bool verify_maximum(const DirectedGraph& graph, const Matching& matching,
                    const std::vector<bool>& active) {
    validate_matching(graph, matching);
    const auto n = graph.node_count();
    if (active.size() != n) throw ValidationError("active set size mismatch");
    for (const auto& [u, v] : matching.pairs()) {
        if (!active[u] || !active[v]) throw ValidationError("matching touches an inactive node");
    }

    // Alternating BFS from all free active out-roles at once.
    std::vector<bool> seen_head(n, false);
    std::vector<NodeId> frontier;
    for (NodeId u = 0; u < n; ++u) {
        if (active[u] && !matching.tail_matched(u)) frontier.push_back(u);
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (NodeId h : graph.out_neighbors(frontier[i])) {
            if (!active[h] || seen_head[h]) continue;
            seen_head[h] = true;
            NodeId next = matching.tail_of(h);
            if (next == kNoNode) return false;
            frontier.push_back(next);
        }
    }
    return true;
}

bool verify_maximum(const DirectedGraph& graph, const Matching& matching) {
    return verify_maximum(graph, matching, std::vector<bool>(graph.node_count(), true));
}

MatchingState::MatchingState(const DirectedGraph& graph, const NodeOrder& order)
    : graph_(&graph),
      sequence_(order.sequence().begin(), order.sequence().end()),
      matching_(graph.node_count()),
      active_(graph.node_count(), false),
      mark_(graph.node_count(), 0),
      back_mark_(graph.node_count(), 0) {
    const auto n = graph.node_count();
    if (order.size() != n) throw UsageError("node order does not match graph");

    scan_offsets_.assign(n + 1, 0);
    scan_targets_.reserve(graph.edge_count());
    for (NodeId u = 0; u < n; ++u) {
        auto outs = graph.out_neighbors(u);
        auto first = scan_targets_.insert(scan_targets_.end(), outs.begin(), outs.end());
        std::sort(first, scan_targets_.end(),
                  [&](NodeId a, NodeId b) { return order.rank(a) < order.rank(b); });
        scan_offsets_[u + 1] = scan_targets_.size();
    }
}

MatchingState::MatchingState(const DirectedGraph& graph, const NodeOrder& order, Matching initial)
    : MatchingState(graph, order) {
    validate_matching(graph, initial);
    matching_ = std::move(initial);
    std::fill(active_.begin(), active_.end(), true);
    active_count_ = active_.size();
}

void MatchingState::shuffle_neighbors(Rng& rng) {
    for (std::size_t u = 0; u + 1 < scan_offsets_.size(); ++u) {
        std::span<NodeId> row(scan_targets_.data() + scan_offsets_[u],
                              scan_offsets_[u + 1] - scan_offsets_[u]);
        shuffle(row, rng);
    }
}

void MatchingState::activate(NodeId v) {
    active_[v] = true;
    ++active_count_;
}

void MatchingState::next_stamp() {
    if (stamp_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(mark_.begin(), mark_.end(), 0);
        stamp_ = 0;
    }
    ++stamp_;
}

// Iterative DFS over alternating paths. Heads marked with the current stamp
// are skipped; callers decide when marks are reset, so several failed
// searches can share one stamp.
bool MatchingState::search(NodeId free_tail) {
    stack_.clear();
    stack_.push_back({free_tail, scan_offsets_[free_tail], scan_offsets_[free_tail + 1], kNoNode});
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.next == top.end) {
            stack_.pop_back();
            continue;
        }
        NodeId head = scan_targets_[top.next++];
        if (!active_[head] || mark_[head] == stamp_) continue;
        mark_[head] = stamp_;
        top.chosen = head;

        NodeId owner = matching_.head_to_tail_[head];
        if (owner == kNoNode) {
            for (const Frame& f : stack_) {
                matching_.tail_to_head_[f.tail] = f.chosen;
                matching_.head_to_tail_[f.chosen] = f.tail;
            }
            ++matching_.size_;
            return true;
        }
        stack_.push_back({owner, scan_offsets_[owner], scan_offsets_[owner + 1], kNoNode});
    }
    return false;
}

bool MatchingState::augment_from(NodeId free_tail) {
    if (free_tail >= active_.size() || !active_[free_tail])
        throw UsageError("augment_from: node is not active");
    if (matching_.tail_matched(free_tail))
        throw UsageError("augment_from: out-role is already matched");
    next_stamp();
    return search(free_tail);
}

// Reverse alternating search: can some free active out-role reach `head`?
bool MatchingState::head_reachable_from_free_tail(NodeId head) {
    if (back_stamp_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(back_mark_.begin(), back_mark_.end(), 0);
        back_stamp_ = 0;
    }
    ++back_stamp_;
    queue_.clear();
    queue_.push_back(head);
    back_mark_[head] = back_stamp_;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
        for (NodeId tail : graph_->in_neighbors(queue_[i])) {
            if (!active_[tail]) continue;
            NodeId matched = matching_.tail_to_head_[tail];
            if (matched == kNoNode) return true;
            if (back_mark_[matched] == back_stamp_) continue;
            back_mark_[matched] = back_stamp_;
            queue_.push_back(matched);
        }
    }
    return false;
}

void MatchingState::extend_with_node(NodeId node) {
    if (node >= active_.size()) throw UsageError("extend_with_node: node out of range");
    if (active_[node]) throw UsageError("extend_with_node: node is already active");
    activate(node);

    // The matching was maximum before the node arrived, so any augmenting
    // path from an old free out-role must end at the node's in-role. If none
    // reaches it now, none will after the node's own augmentation either.
    const bool rescan = head_reachable_from_free_tail(node);

    next_stamp();
    if (search(node)) next_stamp();
    if (!rescan) return;

    // At most one more augmentation is possible.
    for (NodeId u : sequence_) {
        if (!active_[u] || matching_.tail_matched(u)) continue;
        if (search(u)) return;
    }
}

void MatchingState::complete() {
    for (NodeId v = 0; v < active_.size(); ++v) {
        if (!active_[v]) activate(v);
    }
    // One pass suffices: an out-role with no augmenting path never regains one.
    next_stamp();
    for (NodeId u : sequence_) {
        if (matching_.tail_matched(u)) continue;
        if (search(u)) next_stamp();
    }
}

Matching max_matching(const DirectedGraph& graph, const NodeOrder& order) {
    MatchingState state(graph, order);
    state.complete();
    return std::move(state).release();
}

}  // namespace prefmatch
