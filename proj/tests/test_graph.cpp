#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "prefmatch/errors.hpp"
#include "prefmatch/generators.hpp"
#include "prefmatch/graph.hpp"

using namespace prefmatch;

namespace {

std::set<std::pair<std::string, std::string>> labelled_edges(const DirectedGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges()) out.emplace(g.label(e.tail), g.label(e.head));
    return out;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("parse a simple chain") {
        auto parsed = parse_edge_list("a b\nb c");
        const auto& g = parsed.graph;
        CHECK(g.node_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(parsed.duplicate_edges == 0);
        CHECK(g.label(0) == "a");
        CHECK(g.label(2) == "c");
        CHECK(labelled_edges(g) == std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
    }

    TEST_CASE("duplicate lines collapse and are counted") {
        auto parsed = parse_edge_list("a b\na b");
        CHECK(parsed.graph.node_count() == 2);
        CHECK(parsed.graph.edge_count() == 1);
        CHECK(parsed.duplicate_edges == 1);
    }

    TEST_CASE("empty input is rejected") {
        CHECK_THROWS_AS(parse_edge_list(""), IngestionError);
        CHECK_THROWS_AS(parse_edge_list("# only a comment\n\n% another\n"), IngestionError);
    }

    TEST_CASE("malformed line names its line number") {
        try {
            parse_edge_list("a b\n# c\nx y z\n");
            FAIL("expected an ingestion error");
        } catch (const IngestionError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_edge_list("lonely\n"), IngestionError);
    }

    TEST_CASE("comments, blanks, tabs and CRLF") {
        auto parsed = parse_edge_list("% header\n# more\n\n  u\tv\r\n   \nv w\n");
        CHECK(parsed.graph.node_count() == 3);
        CHECK(parsed.graph.edge_count() == 2);
    }

    TEST_CASE("self-loops are kept") {
        auto g = parse_edge_list("v v").graph;
        CHECK(g.edge_count() == 1);
        auto d = degrees(g);
        CHECK(d[0].in == 1);
        CHECK(d[0].out == 1);
        CHECK(d[0].total == 2);
    }

    TEST_CASE("degrees of an out-star and a cycle") {
        auto star = parse_edge_list("hub a\nhub b\nhub c").graph;
        auto d = degrees(star);
        CHECK(d[0].in == 0);
        CHECK(d[0].out == 3);
        CHECK(d[0].total == 3);
        for (NodeId leaf = 1; leaf <= 3; ++leaf) {
            CHECK(d[leaf].in == 1);
            CHECK(d[leaf].out == 0);
            CHECK(d[leaf].total == 1);
        }
        auto cyc = parse_edge_list("1 2\n2 3\n3 1").graph;
        for (const auto& nd : degrees(cyc)) {
            CHECK(nd.in == 1);
            CHECK(nd.out == 1);
            CHECK(nd.total == 2);
        }
    }

    TEST_CASE("average degree is 2L/N") {
        // Node/edge counts of the Wiki-Vote and Florida networks.
        CHECK(std::abs(average_degree(gen_directed_er(7115, 103689, 1)) - 29.15) <= 0.01);
        CHECK(std::abs(average_degree(gen_directed_er(128, 2106, 1)) - 32.91) <= 0.01);

        // Same formula through a real graph: 3 isolated nodes.
        CHECK(average_degree(DirectedGraph::with_index_labels(3, {})) == 0.0);
        CHECK(average_degree(fixtures::out_star(3)) == doctest::Approx(1.5));
    }

    TEST_CASE("constructor rejects invalid graphs") {
        CHECK_THROWS_AS(DirectedGraph({}, {}), UsageError);
        CHECK_THROWS_AS(DirectedGraph({"a", "a"}, {}), UsageError);
        CHECK_THROWS_AS(DirectedGraph({"a", "b"}, {{0, 2}}), UsageError);
        CHECK_THROWS_AS(DirectedGraph({"a", "b"}, {{0, 1}, {0, 1}}), UsageError);
    }

    TEST_CASE("adjacency and lookup") {
        auto g = parse_edge_list("x y\nx z\nz x").graph;
        CHECK(g.find("z") == NodeId{2});
        CHECK_FALSE(g.find("nope").has_value());
        CHECK(g.has_edge(0, 1));
        CHECK_FALSE(g.has_edge(1, 0));
        CHECK(g.out_neighbors(0).size() == 2);
        CHECK(g.in_neighbors(0).size() == 1);
        CHECK(g.in_neighbors(0)[0] == 2);
    }

    TEST_CASE("properties over random graphs") {
        Rng rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            auto n = 1 + uniform_below(rng, 40);
            auto g = fixtures::random_draw(n, uniform_unit(rng) * 0.3, rng);
            auto d = degrees(g);

            std::size_t sum_in = 0, sum_out = 0, sum_total = 0;
            for (const auto& nd : d) {
                CHECK(nd.total == nd.in + nd.out);
                sum_in += nd.in;
                sum_out += nd.out;
                sum_total += nd.total;
            }
            CHECK(sum_in == g.edge_count());
            CHECK(sum_out == g.edge_count());
            CHECK(sum_total == 2 * g.edge_count());
            CHECK(average_degree(g) ==
                  doctest::Approx(static_cast<double>(sum_total) / static_cast<double>(n)));

            // Adjacency consistency: v in out(u) iff u in in(v).
            for (NodeId u = 0; u < n; ++u) {
                for (NodeId v : g.out_neighbors(u)) {
                    auto ins = g.in_neighbors(v);
                    CHECK(std::find(ins.begin(), ins.end(), u) != ins.end());
                }
            }

            // Round trip through the edge-list format (skip graphs with
            // isolated nodes, which the format cannot express).
            if (std::all_of(d.begin(), d.end(), [](const NodeDegree& x) { return x.total > 0; })) {
                std::vector<std::string> header{"round trip"};
                auto again = parse_edge_list(to_edge_list(g, header));
                CHECK(again.duplicate_edges == 0);
                CHECK(again.graph.node_count() == g.node_count());
                CHECK(again.graph.edge_count() == g.edge_count());
                CHECK(labelled_edges(again.graph) == labelled_edges(g));
            }
        }
    }
}
