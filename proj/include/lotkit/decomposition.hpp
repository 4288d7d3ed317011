#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

/// A three-vertex sub-LOT matching the pattern: edge {a,b} labeled c and
/// edge {b,c} labeled a. Orientation-free; a, b, c are pairwise distinct
/// vertex indices of the host graph, edge_ab/edge_bc host edge indices.
struct RosebrockSubLot {
    int a = -1;
    int b = -1;
    int c = -1;
    int edge_ab = -1;
    int edge_bc = -1;

    friend bool operator==(const RosebrockSubLot&, const RosebrockSubLot&) = default;
};

/// An ordered partition of a LOT's edges into Rosebrock sub-LOTs. Parts are
/// listed in replay order: each part after the first shares exactly one
/// vertex with the union of its predecessors, recorded in
/// `identifications` as (part index, shared vertex).
struct Decomposition {
    std::vector<RosebrockSubLot> parts;
    std::vector<std::pair<int, int>> identifications;

    int part_count() const { return static_cast<int>(parts.size()); }
};

/// True iff g is exactly the three-vertex two-edge pattern above, in any
/// orientation and role assignment.
bool is_rosebrock(const LogGraph& g);

/// A Rosebrock sub-LOT of g containing the given edge, if one exists. All
/// role assignments for the edge are checked; when several complete, the
/// one whose companion edge has the lowest index wins.
std::optional<RosebrockSubLot> rosebrock_cover(const LogGraph& g, int edge_index);

/// Glues two LOGs with disjoint vertex names by identifying g2's vertex v2
/// with g1's vertex v1: every occurrence of v2 (endpoint or label) is
/// renamed to v1. |V| = m1 + m2 - 1, edges concatenate. Throws
/// NameClashError, UnknownVertexError.
LogGraph compose(const LogGraph& g1, std::string_view v1, const LogGraph& g2, std::string_view v2);

/// The unique decomposition into Rosebrock sub-LOTs, or nullopt when none
/// exists (in particular whenever m is even: m-1 odd edges cannot pair).
/// Recursion: take the lowest-index leaf a with edge {a,b} labeled c,
/// demand the companion edge {b,c} labeled a, remove both, recurse on the
/// components of b and of c. A single vertex decomposes into zero parts.
/// Requires a connected interior-reduced tree (NotTreeError,
/// NotInteriorReducedError).
std::optional<Decomposition> decompose(const LogGraph& g);

/// decompose with an explicit leaf priority (rank[v] = preference, lower
/// wins). The resulting edge partition does not depend on the ranking; the
/// parameter exists so tests can exercise that uniqueness.
std::optional<Decomposition> decompose_with_rank(const LogGraph& g, std::span<const int> leaf_rank);

/// Whether cp(g) attains (m+1)/2, decided structurally: true iff g
/// decomposes into Rosebrock sub-LOTs. Never runs the exponential search.
bool is_maximal_complexity(const LogGraph& g);

/// Rebuilds a graph from a decomposition by composing standalone copies of
/// the parts along the recorded identifications. For a decomposition of g
/// the result satisfies same_log(recompose(g, d), g).
LogGraph recompose(const LogGraph& g, const Decomposition& d);

}  // namespace lotkit
