#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lotkit/complexity.hpp"
#include "lotkit/decomposition.hpp"
#include "lotkit/gen.hpp"
#include "lotkit/reachability.hpp"
#include "oracles.hpp"

using namespace lotkit;

namespace {

// Mirror of the greedy loop built on public closure calls only; returns the
// chronological seeds and the closure sizes after each step.
std::pair<std::vector<int>, std::vector<int>> greedy_trace(const LogGraph& g) {
    std::vector<int> chosen{0};
    std::vector<int> sizes;
    auto res = closure(g, std::span<const int>(chosen));
    sizes.push_back(static_cast<int>(res.closure.size()));
    while (!res.complete) {
        int best = -1;
        for (const auto& e : g.edges()) {
            bool s_in = res.contains(e.source);
            bool t_in = res.contains(e.target);
            if (s_in != t_in && (best < 0 || e.label < best)) best = e.label;
        }
        REQUIRE(best >= 0);
        chosen.push_back(best);
        res = closure(g, std::span<const int>(chosen));
        sizes.push_back(static_cast<int>(res.closure.size()));
    }
    return {chosen, sizes};
}

}  // namespace

TEST_CASE("exact complexity on the reference fixtures") {
    auto doubled = fixtures::doubled_label_lot();
    auto r1 = exact_complexity(doubled);
    CHECK(r1.value == 2);
    CHECK(r1.method == Method::exact);
    CHECK(r1.witness == std::vector<int>{0, 2});  // {a, c}
    CHECK(is_reachable_from(doubled, std::span<const int>(r1.witness)));

    auto hub = fixtures::hub_lot();
    auto r2 = exact_complexity(hub);
    CHECK(r2.value == 3);
    CHECK(r2.witness == std::vector<int>{0, 1, 3});  // {x1, x2, x4}

    auto rb = fixtures::rosebrock_lot();
    auto r3 = exact_complexity(rb);
    CHECK(r3.value == 2);
    // every 2-subset of a Rosebrock LOT completes, so the lexicographic
    // search stops at the very first one
    CHECK(r3.witness == std::vector<int>{0, 1});  // {a, b}
    CHECK(r3.subsets_examined == 4);              // three singletons + {a,b}

    auto single = LogGraph::from_data({{"a"}, {}});
    auto rs = exact_complexity(single);
    CHECK(rs.value == 1);
    CHECK(rs.witness == std::vector<int>{0});
}

TEST_CASE("exact witness is the lexicographically least at the minimal size") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 150; ++i) {
        auto g = random_lot(3 + static_cast<int>(rng() % 5), 60900 + i);
        auto rep = exact_complexity(g);
        auto [cp, witness] = oracle::brute_force_cp(g);
        CHECK(rep.value == cp);
        CHECK(rep.witness == witness);
    }
}

TEST_CASE("greedy on doubled starts at a and picks c") {
    auto g = fixtures::doubled_label_lot();
    auto rep = greedy_seed(g);
    CHECK(rep.value == 2);
    CHECK(rep.witness == std::vector<int>{0, 2});
    CHECK(rep.method == Method::greedy);
    CHECK(rep.lower_bound == 2);
}

TEST_CASE("greedy meets the bound on rb and a three-part chain") {
    auto rb = fixtures::rosebrock_lot();
    CHECK(greedy_seed(rb).value == 2);

    auto chain = rosebrock_chain(3);
    REQUIRE(chain.vertex_count() == 7);
    auto rep = greedy_seed(chain);
    CHECK(rep.value <= 4);
    CHECK(is_reachable_from(chain, std::span<const int>(rep.witness)));
}

TEST_CASE("greedy preconditions") {
    auto disconnected = LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}}});
    CHECK_THROWS_AS(greedy_seed(disconnected), DisconnectedError);
    auto reduced_not = LogGraph::from_data({{"a", "b"}, {{"a", "b", "a"}}});
    CHECK_THROWS_AS(greedy_seed(reduced_not), NotInteriorReducedError);
}

TEST_CASE("every greedy step after the first gains at least two vertices") {
    LotEnumerator census(5);
    int looked = 0;
    while (auto g = census.next()) {
        if (++looked % 7 != 0) continue;  // sample the census
        auto [chosen, sizes] = greedy_trace(*g);
        auto rep = greedy_seed(*g);
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        CHECK(rep.witness == sorted);
        for (std::size_t k = 1; k < sizes.size(); ++k) {
            CHECK(sizes[k] - sizes[k - 1] >= 2);
        }
    }
}

TEST_CASE("complexity bounds") {
    auto b1 = complexity_bounds(fixtures::doubled_label_lot());
    CHECK(b1.lower == 2);
    CHECK(b1.upper == 2);  // min(4, 1+2, 2)

    auto b3 = complexity_bounds(fixtures::rosebrock_lot());
    CHECK(b3.lower == 2);
    CHECK(b3.upper == 2);

    auto single = LogGraph::from_data({{"a"}, {}});
    auto bs = complexity_bounds(single);
    CHECK(bs.lower == 1);
    CHECK(bs.upper == 1);

    auto capped = complexity_bounds(fixtures::hub_lot(), 3);
    CHECK(capped.upper <= 3);

    auto disconnected = LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}}});
    CHECK_THROWS_AS(complexity_bounds(disconnected), DisconnectedError);
}

TEST_CASE("exact handles graphs that are not interior reduced") {
    auto g = LogGraph::from_data({{"a", "b"}, {{"a", "b", "a"}}});
    auto rep = exact_complexity(g);
    CHECK(rep.value == 1);
    CHECK(rep.witness == std::vector<int>{0});
    CHECK_THROWS_AS(
        exact_complexity(LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}}})),
        DisconnectedError);
}

TEST_CASE("budgeted search returns bounds instead of an exact value") {
    auto chain = rosebrock_chain(3);  // cp = 4
    ExactOptions opts;
    opts.budget = 2;
    auto rep = exact_complexity(chain, opts);
    CHECK(rep.method == Method::trivial_bound);
    CHECK(rep.lower_bound == 3);
    CHECK(rep.value >= rep.lower_bound);
    CHECK(static_cast<int>(rep.witness.size()) == rep.value);
    CHECK(is_reachable_from(chain, std::span<const int>(rep.witness)));
}

TEST_CASE("size guard on the exact search") {
    auto big = random_lot(21, 11);
    CHECK_THROWS_AS(exact_complexity(big), GraphTooLargeError);
    ExactOptions opts;
    opts.allow_large = true;
    opts.budget = 1;
    auto rep = exact_complexity(big, opts);
    CHECK(rep.method == Method::trivial_bound);
    CHECK(rep.lower_bound == 2);
}

TEST_CASE("submaximal seed on the five-path fixture") {
    auto g = fixtures::five_path();
    REQUIRE_FALSE(rosebrock_cover(g, 0).has_value());
    auto rep = submaximal_seed(g, 0);
    CHECK(rep.submax_case == SubmaxCase::label_adjacent);
    CHECK(rep.value == 2);
    CHECK(rep.witness == std::vector<int>{2, 4});  // {x3, x5}
    CHECK(rep.value <= max_seed_bound(5) - 1);
    CHECK(is_reachable_from(g, std::span<const int>(rep.witness)));
    CHECK(exact_complexity(g).value < max_seed_bound(5));
}

TEST_CASE("submaximal preconditions") {
    auto rb = fixtures::rosebrock_lot();
    CHECK_THROWS_AS(submaximal_seed(rb, 0), EdgeIsCoveredError);
    CHECK_THROWS_AS(submaximal_seed(rb, 9), UnknownEdgeError);

    auto doubled = fixtures::doubled_label_lot();  // m = 4
    CHECK_THROWS_AS(submaximal_seed(doubled, 1), InvalidSizeError);

    auto loop = LogGraph::from_data({{"a", "b", "c", "d"},
                                     {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "a"},
                                      {"d", "a", "b"}}});
    CHECK_THROWS_AS(submaximal_seed(loop, 0), NotTreeError);
}

TEST_CASE("submaximal beats the bound on random odd non-decomposable LOTs") {
    int found = 0;
    for (int i = 0; found < 200; ++i) {
        REQUIRE(i < 4000);
        auto g = random_lot(7, 52000 + i);
        if (decompose(g)) continue;
        int uncovered = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!rosebrock_cover(g, e)) {
                uncovered = e;
                break;
            }
        }
        REQUIRE(uncovered >= 0);
        auto rep = submaximal_seed(g, uncovered);
        CHECK(rep.value <= max_seed_bound(7) - 1);
        CHECK(is_reachable_from(g, std::span<const int>(rep.witness)));
        CHECK(exact_complexity(g).value <= rep.value);
        ++found;
    }
}

TEST_CASE("adding an edge never raises the complexity") {
    std::mt19937_64 rng(4110);
    int done = 0;
    for (int i = 0; done < 150; ++i) {
        REQUIRE(i < 2000);
        auto g = random_lot(4 + static_cast<int>(rng() % 4), 73000 + i);
        const int m = g.vertex_count();
        // find a non-adjacent pair and a label off both endpoints
        int u = static_cast<int>(rng() % m);
        int v = static_cast<int>(rng() % m);
        if (u == v || g.edge_between(u, v)) continue;
        int w = static_cast<int>(rng() % m);
        if (w == u || w == v) continue;
        GraphData data = g.to_data();
        data.edges.push_back({g.vertex_name(u), g.vertex_name(v), g.vertex_name(w)});
        auto extended = LogGraph::from_data(data);
        REQUIRE(extended.is_interior_reduced());
        CHECK(exact_complexity(extended).value <= exact_complexity(g).value);
        ++done;
    }
}

TEST_CASE("orientation flips change neither the value nor the witness") {
    std::mt19937_64 rng(6120);
    for (int i = 0; i < 100; ++i) {
        auto g = random_lot(3 + static_cast<int>(rng() % 5), 81000 + i);
        GraphData data = g.to_data();
        for (auto& e : data.edges) {
            if (rng() % 2) std::swap(e.source, e.target);
        }
        auto flipped = LogGraph::from_data(data);
        auto a = exact_complexity(g);
        auto b = exact_complexity(flipped);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
    }
}
