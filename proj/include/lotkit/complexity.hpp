#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

enum class Method { exact, greedy, trivial_bound };

/// Which configuration of the uncovered edge drove submaximal_seed: its
/// label adjacent to an endpoint, or the connecting path with no endpoint
/// label on it, an endpoint label on an interior path edge, or the far
/// endpoint labeling the final path edge.
enum class SubmaxCase { label_adjacent, path_labels_clear, path_interior_hit, path_final_hit };

struct ComplexityReport {
    int value = 0;                  // cp(g) when method == exact, else an upper bound
    std::vector<int> witness;       // sorted seed of size `value` with complete closure
    Method method = Method::trivial_bound;
    int lower_bound = 1;
    std::uint64_t subsets_examined = 0;
    std::optional<SubmaxCase> submax_case;
};

struct ComplexityBounds {
    int lower = 1;
    int upper = 1;
};

struct ExactOptions {
    std::optional<int> budget;  // cap on the subset size searched
    int max_vertices = 20;      // refuse larger graphs unless allow_large
    bool allow_large = false;
};

/// floor((m+1)/2), the seed-size guarantee for connected interior-reduced
/// graphs.
inline int max_seed_bound(int m) { return (m + 1) / 2; }

/// Constructive upper bound: start from the lowest-index vertex, then
/// repeatedly add the label of a boundary edge (one endpoint inside the
/// current closure, one outside). Such a label is never in the closure yet,
/// and interior-reducedness makes every step after the first enlarge the
/// closure by at least two, which yields |S| <= floor((m+1)/2). Ties are
/// broken by lowest label index. Requires connected + interior reduced.
ComplexityReport greedy_seed(const LogGraph& g);

/// Exact cp(g) by subset search: k = 1, 2, ... up to min(greedy value,
/// budget), enumerating k-subsets in lexicographic index order and returning
/// the first complete witness. When the budget cuts the search short the
/// report downgrades to method == trivial_bound and carries the best known
/// bounds instead. Requires connected; refuses m > max_vertices without
/// allow_large.
ComplexityReport exact_complexity(const LogGraph& g, const ExactOptions& opts = {});

/// Cheap bounds: lower = 2 for interior-reduced graphs with m >= 2, else 1.
/// Upper = min(m, 1 + |image of labeling|, floor((m+1)/2) when interior
/// reduced, the given greedy value when supplied). Requires connected.
ComplexityBounds complexity_bounds(const LogGraph& g, std::optional<int> greedy_value = {});

/// Seed construction for an odd-m interior-reduced LOT around an edge that
/// belongs to no Rosebrock sub-LOT. Classifies the neighborhood of the edge
/// and its label, picks the matching two starting vertices, then continues
/// with the greedy rule; the resulting witness has size
/// <= floor((m+1)/2) - 1. The report records which case fired.
/// Throws UnknownEdgeError, NotTreeError, NotInteriorReducedError,
/// InvalidSizeError (even m), EdgeIsCoveredError.
ComplexityReport submaximal_seed(const LogGraph& g, int edge_index);

}  // namespace lotkit
