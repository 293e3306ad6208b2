#include "prefmatch/node_order.hpp"

#include <algorithm>
#include <numeric>

#include "prefmatch/errors.hpp"
#include "prefmatch/random.hpp"

namespace prefmatch {

namespace {

std::vector<NodeId> identity(std::size_t n) {
    std::vector<NodeId> seq(n);
    std::iota(seq.begin(), seq.end(), NodeId{0});
    return seq;
}

}  // namespace

NodeOrder::NodeOrder(OrderKind kind, std::vector<NodeId> sequence, std::uint64_t seed)
    : kind_(kind), seed_(seed), sequence_(std::move(sequence)), rank_(sequence_.size()) {
    for (std::size_t pos = 0; pos < sequence_.size(); ++pos) rank_[sequence_[pos]] = pos;
}

NodeOrder NodeOrder::degree_ascending(const DirectedGraph& graph) {
    auto seq = identity(graph.node_count());
    std::stable_sort(seq.begin(), seq.end(),
                     [&](NodeId a, NodeId b) { return graph.degree(a) < graph.degree(b); });
    return NodeOrder(OrderKind::DegreeAscending, std::move(seq));
}

NodeOrder NodeOrder::degree_descending(const DirectedGraph& graph) {
    auto seq = identity(graph.node_count());
    std::stable_sort(seq.begin(), seq.end(),
                     [&](NodeId a, NodeId b) { return graph.degree(a) > graph.degree(b); });
    return NodeOrder(OrderKind::DegreeDescending, std::move(seq));
}

NodeOrder NodeOrder::random(const DirectedGraph& graph, std::uint64_t seed) {
    auto seq = identity(graph.node_count());
    Rng rng(seed);
    shuffle(std::span<NodeId>(seq), rng);
    return NodeOrder(OrderKind::Random, std::move(seq), seed);
}

NodeOrder NodeOrder::explicit_order(const DirectedGraph& graph, std::vector<NodeId> sequence) {
    const auto n = graph.node_count();
    if (sequence.size() != n)
        throw UsageError("node order must list all " + std::to_string(n) + " nodes exactly once");
    std::vector<bool> seen(n, false);
    for (NodeId v : sequence) {
        if (v >= n || seen[v]) throw UsageError("node order is not a permutation");
        seen[v] = true;
    }
    return NodeOrder(OrderKind::Explicit, std::move(sequence));
}

std::string NodeOrder::name() const {
    switch (kind_) {
        case OrderKind::DegreeAscending: return "asc";
        case OrderKind::DegreeDescending: return "desc";
        case OrderKind::Random: return "random";
        case OrderKind::Explicit: return "explicit";
    }
    return "explicit";
}

}  // namespace prefmatch
