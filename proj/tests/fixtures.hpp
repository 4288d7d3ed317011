#pragma once

#include "lotkit/decomposition.hpp"
#include "lotkit/graph.hpp"

namespace fixtures {

// The four-vertex LOT with edges a->d:c, d->b:c, d->c:a (complexity 2,
// label c used twice).
inline lotkit::LogGraph doubled_label_lot() {
    return lotkit::LogGraph::from_data(
        {{"a", "b", "c", "d"}, {{"a", "d", "c"}, {"d", "b", "c"}, {"d", "c", "a"}}});
}

// Six-vertex LOT around the hub x6; exercised with the three seed sets
// {x1,x4}, {x1,x6}, {x1,x4,x6}.
inline lotkit::LogGraph hub_lot() {
    return lotkit::LogGraph::from_data({{"x1", "x2", "x3", "x4", "x5", "x6"},
                                        {{"x5", "x6", "x4"},
                                         {"x6", "x3", "x2"},
                                         {"x3", "x1", "x4"},
                                         {"x2", "x6", "x1"},
                                         {"x6", "x4", "x5"}}});
}

// The three-vertex building block: a-b labeled c, b-c labeled a.
inline lotkit::LogGraph rosebrock_lot() {
    return lotkit::LogGraph::from_data({{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "c", "a"}}});
}

// Five-vertex path whose edge (x1,x2) belongs to no Rosebrock sub-LOT.
inline lotkit::LogGraph five_path() {
    return lotkit::LogGraph::from_data({{"x1", "x2", "x3", "x4", "x5"},
                                        {{"x1", "x2", "x3"},
                                         {"x2", "x3", "x5"},
                                         {"x3", "x4", "x1"},
                                         {"x4", "x5", "x2"}}});
}

// Two Rosebrock parts glued at a = d: edges (a,b):c, (b,c):a, (a,e):f,
// (e,f):a.
inline lotkit::LogGraph double_rosebrock() {
    auto left = rosebrock_lot();
    auto right = lotkit::LogGraph::from_data(
        {{"d", "e", "f"}, {{"d", "e", "f"}, {"e", "f", "d"}}});
    return lotkit::compose(left, "a", right, "d");
}

// Path with pairwise distinct labels.
inline lotkit::LogGraph injective_lot() {
    return lotkit::LogGraph::from_data(
        {{"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "a"}}});
}

// Two copies of the doubled_label_lot shape glued at a shared vertex with label usage
// separated by side; cp = 3, certifiable only through the split.
inline lotkit::LogGraph amalgam_lot() {
    auto left = doubled_label_lot();
    auto right = lotkit::LogGraph::from_data(
        {{"e", "f", "g", "h"}, {{"e", "h", "g"}, {"h", "f", "g"}, {"h", "g", "e"}}});
    return lotkit::compose(left, "a", right, "e");
}

}  // namespace fixtures
