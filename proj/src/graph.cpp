#include "prefmatch/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "prefmatch/errors.hpp"

namespace prefmatch {

namespace {

std::uint64_t edge_key(NodeId tail, NodeId head) {
    return (static_cast<std::uint64_t>(tail) << 32) | head;
}

// Counting-sort style CSR build. Neighbor order follows edge order.
void build_csr(std::size_t n, std::span<const Edge> edges, bool by_tail,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges) ++offsets[(by_tail ? e.tail : e.head) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) {
        NodeId from = by_tail ? e.tail : e.head;
        targets[cursor[from]++] = by_tail ? e.head : e.tail;
    }
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    if (labels_.empty()) throw UsageError("graph must have at least one node");
    if (labels_.size() >= kNoNode) throw UsageError("too many nodes");

    index_.reserve(labels_.size());
    for (NodeId v = 0; v < labels_.size(); ++v) {
        if (!index_.emplace(labels_[v], v).second)
            throw UsageError("duplicate node label '" + labels_[v] + "'");
    }

    const auto n = labels_.size();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.tail >= n || e.head >= n)
            throw UsageError("edge endpoint out of range");
        if (!seen.insert(edge_key(e.tail, e.head)).second)
            throw UsageError("duplicate edge " + labels_[e.tail] + " -> " + labels_[e.head]);
    }

    build_csr(n, edges_, true, out_offsets_, out_targets_);
    build_csr(n, edges_, false, in_offsets_, in_sources_);
}

DirectedGraph DirectedGraph::with_index_labels(std::size_t node_count, std::vector<Edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    return DirectedGraph(std::move(labels), std::move(edges));
}

std::span<const NodeId> DirectedGraph::out_neighbors(NodeId u) const {
    return std::span<const NodeId>(out_targets_).subspan(out_offsets_[u], out_degree(u));
}

std::span<const NodeId> DirectedGraph::in_neighbors(NodeId v) const {
    return std::span<const NodeId>(in_sources_).subspan(in_offsets_[v], in_degree(v));
}

std::optional<NodeId> DirectedGraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool DirectedGraph::has_edge(NodeId tail, NodeId head) const {
    if (out_degree(tail) <= in_degree(head)) {
        auto outs = out_neighbors(tail);
        return std::find(outs.begin(), outs.end(), head) != outs.end();
    }
    auto ins = in_neighbors(head);
    return std::find(ins.begin(), ins.end(), tail) != ins.end();
}

ParsedGraph parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::size_t duplicates = 0;

    auto intern = [&](std::string&& label) {
        auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(std::move(label));
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream tokens(line);
        std::string tail, head, extra;
        if (!(tokens >> tail >> head) || (tokens >> extra)) {
            throw IngestionError("line " + std::to_string(line_no) +
                                 ": expected exactly two node labels");
        }
        NodeId t = intern(std::move(tail));
        NodeId h = intern(std::move(head));
        if (seen.insert(edge_key(t, h)).second) {
            edges.push_back({t, h});
        } else {
            ++duplicates;
        }
    }
    if (in.bad()) throw IngestionError("read error");
    if (labels.empty()) throw IngestionError("edge list contains no nodes");

    return {DirectedGraph(std::move(labels), std::move(edges)), duplicates};
}

ParsedGraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const DirectedGraph& graph, std::span<const std::string> header) {
    std::string out;
    for (const auto& line : header) {
        out += "# ";
        out += line;
        out += '\n';
    }
    for (const auto& e : graph.edges()) {
        out += graph.label(e.tail);
        out += ' ';
        out += graph.label(e.head);
        out += '\n';
    }
    return out;
}

DegreeView degrees(const DirectedGraph& graph) {
    DegreeView view(graph.node_count());
    for (NodeId v = 0; v < view.size(); ++v) {
        view[v].in = graph.in_degree(v);
        view[v].out = graph.out_degree(v);
        view[v].total = view[v].in + view[v].out;
    }
    return view;
}

double average_degree(const DirectedGraph& graph) {
    return 2.0 * static_cast<double>(graph.edge_count()) / static_cast<double>(graph.node_count());
}

}  // namespace prefmatch
