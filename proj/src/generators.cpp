#include "prefmatch/generators.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "prefmatch/errors.hpp"
#include "prefmatch/random.hpp"

namespace prefmatch {

namespace {

std::uint64_t edge_key(NodeId tail, NodeId head) {
    return (static_cast<std::uint64_t>(tail) << 32) | head;
}

}  // namespace

std::string BaParams::describe() const {
    std::ostringstream out;
    out << "ba n=" << n << " m=" << m_attach << " m0=" << m0 << " p=" << p << " seed=" << seed;
    return out.str();
}

DirectedGraph gen_directed_ba(const BaParams& params) {
    const auto [n, m, m0, p, seed] = params;
    if (m < 1) throw UsageError("ba: m must be at least 1");
    if (m0 < m) throw UsageError("ba: m0 must be at least m");
    if (n <= m0) throw UsageError("ba: n must exceed m0");
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("ba: p must lie in [0, 1]");

    // Stream ids sit far above any sample index so they never coincide with
    // the per-sample seeds derived from the same base seed.
    Rng topology(derive_seed(seed, (std::uint64_t{1} << 62) + 1));
    Rng orientation(derive_seed(seed, (std::uint64_t{1} << 62) + 2));

    std::vector<Edge> edges;
    edges.reserve(m0 + (n - m0) * m);
    // Every edge adds both endpoints, so a uniform pick from this list is a
    // total-degree-proportional pick of a node.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (NodeId v = 0; v < m0; ++v) {
        auto next = static_cast<NodeId>((v + 1) % m0);
        edges.push_back({v, next});
        endpoints.push_back(v);
        endpoints.push_back(next);
    }

    std::vector<NodeId> targets;
    for (auto fresh = static_cast<NodeId>(m0); fresh < n; ++fresh) {
        targets.clear();
        while (targets.size() < m) {
            NodeId old = endpoints[uniform_below(topology, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), old) == targets.end())
                targets.push_back(old);
        }
        for (NodeId old : targets) {
            if (uniform_unit(orientation) < p) {
                edges.push_back({old, fresh});
            } else {
                edges.push_back({fresh, old});
            }
            endpoints.push_back(old);
            endpoints.push_back(fresh);
        }
    }
    return DirectedGraph::with_index_labels(n, std::move(edges));
}

DirectedGraph gen_directed_er(std::size_t n, std::size_t l, std::uint64_t seed) {
    if (n == 0) throw UsageError("er: n must be at least 1");
    const std::uint64_t capacity = static_cast<std::uint64_t>(n) * (n - 1);
    if (l > capacity)
        throw UsageError("er: l=" + std::to_string(l) + " exceeds n(n-1)=" +
                         std::to_string(capacity));

    // Floyd's sampling of l distinct pair indices out of n(n-1).
    Rng rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(l);
    for (std::uint64_t j = capacity - l; j < capacity; ++j) {
        std::uint64_t t = uniform_below(rng, j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
    std::sort(picks.begin(), picks.end());

    std::vector<Edge> edges;
    edges.reserve(l);
    for (std::uint64_t k : picks) {
        auto tail = static_cast<NodeId>(k / (n - 1));
        auto rest = static_cast<NodeId>(k % (n - 1));
        edges.push_back({tail, rest < tail ? rest : rest + 1});
    }
    return DirectedGraph::with_index_labels(n, std::move(edges));
}

ReversalResult reverse_edges(const DirectedGraph& graph, const ReversalParams& params) {
    if (!(params.r >= 0.0 && params.r <= 1.0)) throw UsageError("reverse: R must lie in [0, 1]");

    std::unordered_set<std::uint64_t> present;
    present.reserve(graph.edge_count());
    for (const auto& e : graph.edges()) present.insert(edge_key(e.tail, e.head));

    Rng rng(params.seed);
    std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
    std::size_t reversed = 0;
    std::size_t skipped = 0;
    // Degrees are read from the untouched input graph throughout.
    for (auto& e : edges) {
        if (graph.degree(e.tail) >= graph.degree(e.head)) continue;
        if (!(uniform_unit(rng) < params.r)) continue;
        if (present.count(edge_key(e.head, e.tail))) {
            ++skipped;
            continue;
        }
        present.erase(edge_key(e.tail, e.head));
        present.insert(edge_key(e.head, e.tail));
        std::swap(e.tail, e.head);
        ++reversed;
    }
    std::vector<std::string> labels(graph.labels().begin(), graph.labels().end());
    return {DirectedGraph(std::move(labels), std::move(edges)), reversed, skipped};
}

}  // namespace prefmatch
