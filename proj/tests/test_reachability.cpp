#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lotkit/gen.hpp"
#include "lotkit/reachability.hpp"
#include "oracles.hpp"

using namespace lotkit;

namespace {

std::vector<std::string> names_of(const LogGraph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(g.vertex_name(v));
    return out;
}

LogGraph shuffled_edges(const LogGraph& g, std::mt19937_64& rng) {
    GraphData data = g.to_data();
    std::shuffle(data.edges.begin(), data.edges.end(), rng);
    return LogGraph::from_data(data);
}

LogGraph flipped_edges(const LogGraph& g, std::mt19937_64& rng) {
    GraphData data = g.to_data();
    for (auto& e : data.edges) {
        if (rng() % 2) std::swap(e.source, e.target);
    }
    return LogGraph::from_data(data);
}

}  // namespace

TEST_CASE("hub lot closures from the three canonical seed sets") {
    auto g = fixtures::hub_lot();

    auto left = closure_by_name(g, {"x1", "x4"});
    CHECK(names_of(g, left.closure) == std::vector<std::string>{"x1", "x3", "x4"});
    CHECK_FALSE(left.complete);

    auto middle = closure_by_name(g, {"x1", "x6"});
    CHECK(names_of(g, middle.closure) == std::vector<std::string>{"x1", "x2", "x3", "x6"});
    CHECK_FALSE(middle.complete);

    auto right = closure_by_name(g, {"x1", "x4", "x6"});
    CHECK(right.closure.size() == 6);
    CHECK(right.complete);
}

TEST_CASE("seeding with every vertex leaves no trace") {
    auto g = fixtures::doubled_label_lot();
    auto res = closure(g, {0, 1, 2, 3});
    CHECK(res.complete);
    CHECK(res.trace.empty());
    CHECK(res.closure == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("doubled closure from {a,c} completes") {
    auto g = fixtures::doubled_label_lot();
    auto res = closure_by_name(g, {"a", "c"});
    CHECK(res.complete);
    CHECK(oracle::replay_trace(g, res));
}

TEST_CASE("is_reachable_from agrees with the closure") {
    auto g = fixtures::hub_lot();
    CHECK(is_reachable_from(g, {0, 3, 5}));
    CHECK_FALSE(is_reachable_from(g, {0, 3}));
    auto single = LogGraph::from_data({{"a"}, {}});
    CHECK(is_reachable_from(single, {0}));
    CHECK_FALSE(is_reachable_from(single, std::span<const int>{}));
}

TEST_CASE("unknown seed vertex") {
    auto g = fixtures::rosebrock_lot();
    CHECK_THROWS_AS(closure(g, {0, 7}), UnknownVertexError);
    CHECK_THROWS_AS(closure_by_name(g, {"a", "zz"}), UnknownVertexError);
}

TEST_CASE("duplicate seeds collapse") {
    auto g = fixtures::rosebrock_lot();
    auto res = closure(g, {1, 1, 0, 0});
    CHECK(res.seed == std::vector<int>{0, 1});
    CHECK(res.complete);
}

TEST_CASE("worklist closure equals the naive fixed point exhaustively") {
    for (int m : {3, 4}) {
        LotEnumerator census(m);
        while (auto g = census.next()) {
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> seed;
                for (int v = 0; v < m; ++v) {
                    if (mask & (1u << v)) seed.push_back(v);
                }
                auto res = closure(*g, std::span<const int>(seed));
                CHECK(res.closure == oracle::naive_closure(*g, seed));
                CHECK(res.complete == oracle::naive_complete(*g, seed));
                CHECK(is_reachable_from(*g, std::span<const int>(seed)) == res.complete);
                CHECK(oracle::replay_trace(*g, res));
            }
        }
    }
}

TEST_CASE("closure properties on random graphs") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 400; ++i) {
        auto g = random_lot(3 + static_cast<int>(rng() % 5), 31100 + i);
        const int m = g.vertex_count();
        std::vector<int> small;
        std::vector<int> big;
        for (int v = 0; v < m; ++v) {
            if (rng() % 3 == 0) small.push_back(v);
            if (rng() % 2 == 0) big.push_back(v);
        }
        // force small subset of big
        std::vector<int> merged = big;
        merged.insert(merged.end(), small.begin(), small.end());

        auto rs = closure(g, std::span<const int>(small));
        auto rb = closure(g, std::span<const int>(merged));

        // monotone in the seed
        CHECK(std::includes(rb.closure.begin(), rb.closure.end(), rs.closure.begin(),
                            rs.closure.end()));
        // idempotent
        auto again = closure(g, std::span<const int>(rs.closure));
        CHECK(again.closure == rs.closure);
        // edge order is irrelevant
        auto perm = shuffled_edges(g, rng);
        CHECK(closure(perm, std::span<const int>(small)).closure == rs.closure);
        // orientation is irrelevant
        auto flip = flipped_edges(g, rng);
        CHECK(closure(flip, std::span<const int>(small)).closure == rs.closure);
        // a fixed point never covers exactly m-1 vertices
        CHECK(static_cast<int>(rs.closure.size()) != m - 1);
        CHECK(oracle::replay_trace(g, rs));
        CHECK(std::includes(rs.closure.begin(), rs.closure.end(), rs.seed.begin(),
                            rs.seed.end()));
    }
}

TEST_CASE("no fixed point of size m-1 over the m<=4 censuses") {
    for (int m : {3, 4}) {
        LotEnumerator census(m);
        while (auto g = census.next()) {
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> seed;
                for (int v = 0; v < m; ++v) {
                    if (mask & (1u << v)) seed.push_back(v);
                }
                auto res = closure(*g, std::span<const int>(seed));
                CHECK(static_cast<int>(res.closure.size()) != m - 1);
            }
        }
    }
}
