#pragma once

#include <string>
#include <vector>

#include "prefmatch/graph.hpp"
#include "prefmatch/random.hpp"

namespace fixtures {

using prefmatch::DirectedGraph;
using prefmatch::Edge;
using prefmatch::NodeId;

struct Named {
    std::string name;
    DirectedGraph graph;
};

// Out-star: node 0 is the hub, pointing at nodes 1..leaves.
inline DirectedGraph out_star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return DirectedGraph::with_index_labels(leaves + 1, edges);
}

inline DirectedGraph in_star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.push_back({v, 0});
    return DirectedGraph::with_index_labels(leaves + 1, edges);
}

inline DirectedGraph path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return DirectedGraph::with_index_labels(n, edges);
}

// n = 1 gives a self-loop.
inline DirectedGraph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
    return DirectedGraph::with_index_labels(n, edges);
}

// Each ordered pair, self-pairs included, kept with probability q.
inline DirectedGraph random_draw(std::size_t n, double q, prefmatch::Rng& rng) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            if (prefmatch::uniform_unit(rng) < q) edges.push_back({u, v});
    return DirectedGraph::with_index_labels(n, edges);
}

// {1->2, 2->1, 1->3} with labels "1","2","3" at indices 0,1,2.
inline DirectedGraph two_cycle_with_tail() {
    return DirectedGraph({"1", "2", "3"}, {{0, 1}, {1, 0}, {0, 2}});
}

/// Small graphs (N <= 8): stars, paths, cycles and seeded random draws.
inline std::vector<Named> small_corpus() {
    std::vector<Named> out;
    for (std::size_t k = 1; k <= 7; ++k) {
        out.push_back({"out_star_" + std::to_string(k), out_star(k)});
        out.push_back({"in_star_" + std::to_string(k), in_star(k)});
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        out.push_back({"path_" + std::to_string(n), path(n)});
        out.push_back({"cycle_" + std::to_string(n), cycle(n)});
    }
    out.push_back({"two_cycle_with_tail", two_cycle_with_tail()});
    prefmatch::Rng rng(20240611);
    const double densities[] = {0.08, 0.15, 0.25, 0.4, 0.6};
    for (int rep = 0; rep < 5; ++rep)
        for (std::size_t n = 1; n <= 8; ++n)
            for (double q : densities)
                out.push_back({"draw_n" + std::to_string(n) + "_q" + std::to_string(q) + "_" +
                                   std::to_string(rep),
                               random_draw(n, q, rng)});
    return out;
}

}  // namespace fixtures
