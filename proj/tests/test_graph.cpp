#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "lotkit/graph.hpp"

using namespace lotkit;

TEST_CASE("doubled validation flags") {
    auto g = fixtures::doubled_label_lot();
    auto rep = validate(g);
    CHECK(rep.connected);
    CHECK(rep.tree);
    CHECK(rep.interior_reduced);
    CHECK_FALSE(rep.injective);  // c labels two edges
    CHECK(rep.structurally_valid());
    CHECK(rep.interior_violations.empty());
}

TEST_CASE("single vertex validates vacuously") {
    auto g = LogGraph::from_data({{"a"}, {}});
    auto rep = validate(g);
    CHECK(rep.connected);
    CHECK(rep.tree);
    CHECK(rep.interior_reduced);
    CHECK(rep.injective);
    CHECK(rep.structurally_valid());
}

TEST_CASE("label on endpoint clears the flag and lists the edge") {
    auto g = LogGraph::from_data({{"a", "b"}, {{"a", "b", "a"}}});
    auto rep = validate(g);
    CHECK_FALSE(rep.interior_reduced);
    REQUIRE(rep.interior_violations.size() == 1);
    CHECK(rep.interior_violations[0] == 0);
    // still a simple LOG
    CHECK(rep.structurally_valid());
}

TEST_CASE("construction rejects structural violations") {
    CHECK_THROWS_AS(LogGraph::from_data({{"a", "b"}, {{"a", "a", "b"}}}), MalformedGraphError);
    CHECK_THROWS_AS(
        LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "a", "c"}}}),
        DuplicateEdgeError);
    CHECK_THROWS_AS(LogGraph::from_data({{"a", "b"}, {{"a", "b", "q"}}}), MalformedGraphError);
    CHECK_THROWS_AS(LogGraph::from_data({{"a", "a"}, {}}), MalformedGraphError);
    CHECK_THROWS_AS(LogGraph::from_data({{"a", "1b"}, {}}), MalformedGraphError);
    CHECK_THROWS_AS(LogGraph::from_data({{}, {}}), MalformedGraphError);
}

TEST_CASE("validate on raw data reports instead of throwing") {
    GraphData data{{"a", "b"}, {{"a", "b", "q"}, {"a", "a", "a"}, {"a", "b", "a"}}};
    auto rep = validate(data);
    CHECK_FALSE(rep.structurally_valid());
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].kind == ViolationKind::unknown_vertex);
    CHECK(rep.violations[0].edge == 0);
    CHECK(rep.violations[1].kind == ViolationKind::self_loop);
    // flags computed on the clean remainder (one a-b edge labeled a)
    CHECK(rep.connected);
    CHECK_FALSE(rep.interior_reduced);
    CHECK(rep.interior_violations == std::vector<int>{2});
}

TEST_CASE("validate is pure") {
    auto g = fixtures::hub_lot();
    auto r1 = validate(g);
    auto r2 = validate(g);
    CHECK(r1.connected == r2.connected);
    CHECK(r1.tree == r2.tree);
    CHECK(r1.interior_reduced == r2.interior_reduced);
    CHECK(r1.injective == r2.injective);
    CHECK(r1.violations.size() == r2.violations.size());
    CHECK(r1.interior_violations == r2.interior_violations);
}

TEST_CASE("spanning tree of a tree is the tree itself") {
    auto g = fixtures::doubled_label_lot();
    CHECK(spanning_tree(g) == g);
}

TEST_CASE("spanning tree keeps edges in input order") {
    // doubled plus a cycle-closing edge b-c
    auto g = LogGraph::from_data({{"a", "b", "c", "d"},
                                  {{"a", "d", "c"}, {"d", "b", "c"}, {"d", "c", "a"},
                                   {"b", "c", "d"}}});
    auto t = spanning_tree(g);
    CHECK(t == fixtures::doubled_label_lot());

    auto triangle = LogGraph::from_data(
        {{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "c", "a"}, {"c", "a", "b"}}});
    auto t2 = spanning_tree(triangle);
    REQUIRE(t2.edge_count() == 2);
    CHECK(t2 == fixtures::rosebrock_lot());
}

TEST_CASE("spanning tree requires connectivity") {
    auto g = LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}}});
    CHECK_FALSE(g.is_connected());
    CHECK_THROWS_AS(spanning_tree(g), DisconnectedError);
}

TEST_CASE("spanning tree preserves interior-reducedness and the vertex set") {
    auto g = LogGraph::from_data({{"a", "b", "c", "d"},
                                  {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "a"},
                                   {"a", "d", "b"}, {"a", "c", "d"}}});
    REQUIRE(g.is_interior_reduced());
    auto t = spanning_tree(g);
    CHECK(t.is_tree());
    CHECK(t.is_interior_reduced());
    CHECK(t.vertex_names() == g.vertex_names());
}

TEST_CASE("equality predicates") {
    auto a = fixtures::rosebrock_lot();
    auto b = LogGraph::from_data({{"a", "b", "c"}, {{"b", "c", "a"}, {"a", "b", "c"}}});
    CHECK_FALSE(a == b);  // different edge order
    CHECK(same_log(a, b));
    auto c = LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}, {"c", "b", "a"}}});
    CHECK_FALSE(same_log(a, c));  // reversed orientation is a different triple
}

TEST_CASE("induced subgraph") {
    auto g = fixtures::double_rosebrock();
    auto sub = induced_subgraph(g, std::vector<int>{0, 1, 2});  // a, b, c
    CHECK(sub == fixtures::rosebrock_lot());
    // the {a,e,f} side keeps its labels inside
    auto sub2 = induced_subgraph(g, std::vector<int>{0, 3, 4});
    CHECK(sub2.edge_count() == 2);
    // a label pointing outside the subset is rejected
    CHECK_THROWS_AS(induced_subgraph(fixtures::doubled_label_lot(), std::vector<int>{0, 3}),
                    MalformedGraphError);
}

TEST_CASE("vertex lookup") {
    auto g = fixtures::doubled_label_lot();
    CHECK(g.require_vertex("d") == 3);
    CHECK_FALSE(g.find_vertex("q").has_value());
    CHECK_THROWS_AS(g.require_vertex("q"), UnknownVertexError);
    CHECK(g.edge_between(0, 3).has_value());
    CHECK(g.edge_between(3, 0) == g.edge_between(0, 3));
    CHECK_FALSE(g.edge_between(0, 1).has_value());
}
