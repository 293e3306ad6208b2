#include "prefmatch/mds.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "prefmatch/errors.hpp"
#include "prefmatch/random.hpp"
#include "prefmatch/stats.hpp"

namespace prefmatch {

MdsResult extract_drivers(const DirectedGraph& graph, Matching matching, const NodeOrder& order) {
    if (!verify_maximum(graph, matching)) throw ValidationError("matching is not maximum");

    const auto n = graph.node_count();
    MdsResult result;
    result.perfect_matching = matching.size() == n;
    if (result.perfect_matching) {
        result.drivers.push_back(order.at(0));
    } else {
        for (NodeId v = 0; v < n; ++v) {
            if (!matching.head_matched(v)) result.drivers.push_back(v);
        }
    }
    result.n_d = result.drivers.size();
    result.lambda_d = static_cast<double>(result.n_d) / static_cast<double>(n);
    result.avg_degree_d = avg_degree_of(graph, result.drivers);
    result.witness = std::move(matching);
    return result;
}

MdsResult preferential_mds(const DirectedGraph& graph, const NodeOrder& order, std::size_t m) {
    const auto n = graph.node_count();
    if (m > n)
        throw UsageError("preferential node count m=" + std::to_string(m) + " exceeds N=" +
                         std::to_string(n));
    MatchingState state(graph, order);
    for (std::size_t i = 0; i < m; ++i) state.extend_with_node(order.at(i));
    if (m < n) state.complete();
    return extract_drivers(graph, std::move(state).release(), order);
}

MdsResult random_mds(const DirectedGraph& graph, std::uint64_t seed) {
    auto order = NodeOrder::random(graph, seed);
    MatchingState state(graph, order);
    Rng rng(derive_seed(seed, 1));
    state.shuffle_neighbors(rng);
    state.complete();
    return extract_drivers(graph, std::move(state).release(), order);
}

SampleSet sample_mds(const DirectedGraph& graph, const SampleOptions& options) {
    if (options.count == 0) throw UsageError("sample count must be at least 1");

    const auto count = options.count;
    const bool need_sets = options.dedupe;
    std::vector<double> kd(count);
    std::vector<std::size_t> nd(count);
    std::vector<std::vector<NodeId>> driver_sets(need_sets ? count : 0);
    std::vector<MdsResult> results(options.keep_results ? count : 0);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < count; i += stride) {
            auto mds = random_mds(graph, derive_seed(options.seed, i));
            kd[i] = mds.avg_degree_d;
            nd[i] = mds.n_d;
            if (need_sets) driver_sets[i] = mds.drivers;
            if (options.keep_results) results[i] = std::move(mds);
        }
    };

    const auto threads = std::clamp<std::size_t>(options.threads, 1, count);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    work(t, threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    SampleSet set;
    auto& s = set.summary;
    s.sample_count = count;
    s.n_d = nd[0];
    double sum = 0.0;
    s.min_kd = kd[0];
    s.max_kd = kd[0];
    for (std::size_t i = 0; i < count; ++i) {
        if (nd[i] != s.n_d) throw ValidationError("sampled MDS sizes disagree");
        sum += kd[i];
        s.min_kd = std::min(s.min_kd, kd[i]);
        s.max_kd = std::max(s.max_kd, kd[i]);
    }
    // Rounding in the sum must not push the mean outside the observed range.
    s.mean_kd = std::clamp(sum / static_cast<double>(count), s.min_kd, s.max_kd);

    if (options.dedupe) {
        std::set<std::vector<NodeId>> seen;
        set.duplicate.resize(count);
        for (std::size_t i = 0; i < count; ++i)
            set.duplicate[i] = !seen.insert(std::move(driver_sets[i])).second;
        s.distinct_driver_sets = seen.size();
    }
    set.kd = std::move(kd);
    set.results = std::move(results);
    return set;
}

}  // namespace prefmatch
