#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "prefmatch/errors.hpp"
#include "prefmatch/matching.hpp"

using namespace prefmatch;

namespace {

DirectedGraph labelled(std::vector<std::string> labels, std::vector<Edge> edges) {
    return DirectedGraph(std::move(labels), std::move(edges));
}

std::set<Edge> pair_set(const Matching& m) {
    auto p = m.pairs();
    return {p.begin(), p.end()};
}

}  // namespace

TEST_SUITE("matching") {
    TEST_CASE("oracle fixtures") {
        // Expected values used below, recomputed here by enumeration.
        CHECK(oracle::max_matching_size(fixtures::path(3)) == 2);
        CHECK(oracle::max_matching_size(fixtures::out_star(3)) == 1);
        CHECK(oracle::max_matching_size(fixtures::cycle(3)) == 3);
        auto g = fixtures::two_cycle_with_tail();
        CHECK(oracle::max_matching_size(g) == 2);
        std::set<std::vector<Edge>> expected{{{0, 1}, {1, 0}}, {{0, 2}, {1, 0}}};
        CHECK(oracle::maximum_matchings(g) == expected);
    }

    TEST_CASE("augment_from: single edge") {
        auto g = labelled({"a", "b"}, {{0, 1}});
        auto order = NodeOrder::degree_ascending(g);
        MatchingState state(g, order, Matching(2));
        CHECK(state.augment_from(0));
        CHECK(state.matching().size() == 1);
        CHECK(state.matching().head_of(0) == 1);
    }

    TEST_CASE("augment_from: leaf of an out-star has nowhere to go") {
        auto g = fixtures::out_star(3);
        auto order = NodeOrder::degree_ascending(g);
        MatchingState state(g, order, Matching::from_pairs(4, std::vector<Edge>{{0, 1}}));
        for (NodeId leaf = 1; leaf <= 3; ++leaf) CHECK_FALSE(state.augment_from(leaf));
        CHECK(state.matching().size() == 1);
        CHECK(state.matching().head_of(0) == 1);
    }

    TEST_CASE("augment_from: path extends behind a matched edge") {
        auto g = fixtures::path(3);  // 0 -> 1 -> 2
        auto order = NodeOrder::degree_ascending(g);
        MatchingState state(g, order, Matching::from_pairs(3, std::vector<Edge>{{1, 2}}));
        CHECK(state.augment_from(0));
        CHECK(pair_set(state.matching()) == std::set<Edge>{{0, 1}, {1, 2}});
    }

    TEST_CASE("augment_from: precondition violations") {
        auto g = fixtures::path(3);
        auto order = NodeOrder::degree_ascending(g);
        MatchingState empty(g, order);
        CHECK_THROWS_AS(empty.augment_from(0), UsageError);  // inactive
        MatchingState full(g, order, Matching::from_pairs(3, std::vector<Edge>{{1, 2}}));
        CHECK_THROWS_AS(full.augment_from(1), UsageError);  // already matched
    }

    TEST_CASE("max_matching sizes") {
        CHECK(max_matching(fixtures::cycle(3), NodeOrder::degree_ascending(fixtures::cycle(3))).size() == 3);
        auto star = fixtures::out_star(3);
        CHECK(max_matching(star, NodeOrder::degree_ascending(star)).size() == 1);
        auto p = fixtures::path(3);
        CHECK(max_matching(p, NodeOrder::degree_descending(p)).size() == 2);
    }

    TEST_CASE("max_matching is deterministic") {
        Rng rng(99);
        auto g = fixtures::random_draw(30, 0.1, rng);
        auto order = NodeOrder::random(g, 5);
        CHECK(max_matching(g, order) == max_matching(g, order));
    }

    TEST_CASE("verify_maximum") {
        auto cyc = fixtures::cycle(3);
        auto perfect = Matching::from_pairs(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
        CHECK(verify_maximum(cyc, perfect));

        auto p = fixtures::path(3);
        CHECK_FALSE(verify_maximum(p, Matching::from_pairs(3, std::vector<Edge>{{0, 1}})));

        auto edgeless = DirectedGraph::with_index_labels(4, {});
        CHECK(verify_maximum(edgeless, Matching(4)));

        // Not an edge of the path.
        CHECK_THROWS_AS(verify_maximum(p, Matching::from_pairs(3, std::vector<Edge>{{2, 0}})),
                        ValidationError);
        // Injectivity breach.
        CHECK_THROWS_AS(Matching::from_pairs(3, std::vector<Edge>{{0, 1}, {2, 1}}), ValidationError);
        // Matching reaching outside the active set.
        CHECK_THROWS_AS(verify_maximum(p, Matching::from_pairs(3, std::vector<Edge>{{0, 1}}),
                                       std::vector<bool>{true, false, true}),
                        ValidationError);
    }

    TEST_CASE("extend_with_node: isolated node changes nothing") {
        auto g = DirectedGraph({"1", "2", "x"}, {{0, 1}, {1, 0}});
        auto order = NodeOrder::explicit_order(g, {0, 1, 2});
        MatchingState state(g, order);
        state.extend_with_node(0);
        state.extend_with_node(1);
        auto before = state.matching();
        CHECK(before.size() == 2);
        state.extend_with_node(2);
        CHECK(state.matching() == before);
    }

    TEST_CASE("extend_with_node: new in-role unreachable") {
        auto g = fixtures::two_cycle_with_tail();  // 1->2, 2->1, 1->3
        auto order = NodeOrder::explicit_order(g, {0, 1, 2});
        MatchingState state(g, order);
        state.extend_with_node(0);
        state.extend_with_node(1);
        CHECK(pair_set(state.matching()) == std::set<Edge>{{0, 1}, {1, 0}});
        state.extend_with_node(2);
        CHECK(pair_set(state.matching()) == std::set<Edge>{{0, 1}, {1, 0}});
        CHECK(state.matching().size() == 2);
    }

    TEST_CASE("extend_with_node: rank-preferring scan picks the low-rank in-role") {
        auto g = fixtures::two_cycle_with_tail();
        // Ascending degree: 3 (deg 1), 2 (deg 2), 1 (deg 3).
        auto order = NodeOrder::degree_ascending(g);
        CHECK(std::vector<NodeId>(order.sequence().begin(), order.sequence().end()) ==
              std::vector<NodeId>{2, 1, 0});
        MatchingState state(g, order);
        state.extend_with_node(2);
        state.extend_with_node(1);
        CHECK(state.matching().size() == 0);
        state.extend_with_node(0);
        CHECK(pair_set(state.matching()) == std::set<Edge>{{1, 0}, {0, 2}});
        CHECK_FALSE(state.matching().head_matched(1));
    }

    TEST_CASE("extend_with_node: self-loop and double activation") {
        auto g = fixtures::cycle(1);
        auto order = NodeOrder::degree_ascending(g);
        MatchingState state(g, order);
        state.extend_with_node(0);
        CHECK(state.matching().size() == 1);
        CHECK_THROWS_AS(state.extend_with_node(0), UsageError);
    }

    TEST_CASE("matching size agrees with brute force under every order kind") {
        for (const auto& [name, g] : fixtures::small_corpus()) {
            CAPTURE(name);
            auto expected = oracle::max_matching_size(g);
            for (const auto& order :
                 {NodeOrder::degree_ascending(g), NodeOrder::degree_descending(g),
                  NodeOrder::random(g, 1), NodeOrder::random(g, 2)}) {
                auto m = max_matching(g, order);
                CHECK(m.size() == expected);
                CHECK(verify_maximum(g, m));
            }
        }
    }

    TEST_CASE("incremental properties over random graphs") {
        Rng rng(4242);
        for (int trial = 0; trial < 300; ++trial) {
            auto n = 1 + uniform_below(rng, 25);
            auto g = fixtures::random_draw(n, 0.02 + uniform_unit(rng) * 0.25, rng);
            auto order = NodeOrder::random(g, trial);
            MatchingState state(g, order);
            std::vector<bool> was_matched(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                state.extend_with_node(order.at(i));
                const auto& m = state.matching();
                validate_matching(g, m);
                CHECK(verify_maximum(g, m, state.active()));
                for (NodeId v = 0; v < n; ++v) {
                    if (was_matched[v]) CHECK(m.head_matched(v));
                    was_matched[v] = m.head_matched(v);
                    if (m.head_matched(v) || m.tail_matched(v)) CHECK(state.is_active(v));
                }
            }
            CHECK(state.active_count() == n);
            auto fresh = max_matching(g, NodeOrder::degree_descending(g));
            CHECK(state.matching().size() == fresh.size());
        }
    }

    TEST_CASE("shuffled scans still give maximum matchings") {
        Rng rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            auto g = fixtures::random_draw(1 + uniform_below(rng, 40), 0.08, rng);
            auto order = NodeOrder::random(g, trial);
            MatchingState state(g, order);
            Rng scan(trial);
            state.shuffle_neighbors(scan);
            state.complete();
            CHECK(verify_maximum(g, state.matching()));
            CHECK(state.matching().size() == max_matching(g, order).size());
        }
    }
}
