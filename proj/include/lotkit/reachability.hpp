#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

/// One derivation step: `vertex` became reachable through `via_edge`, whose
/// label is `label`. The edge's other endpoint and the label are both seeds
/// or appear earlier in the trace.
struct TraceStep {
    int vertex = -1;
    int via_edge = -1;
    int label = -1;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// The reachable set of a seed together with a replayable derivation.
struct ReachabilityResult {
    std::vector<int> seed;     // sorted, duplicates removed
    std::vector<int> closure;  // sorted; always a superset of seed
    std::vector<TraceStep> trace;
    bool complete = false;     // closure == V

    bool contains(int v) const;
};

/// Least fixed point of the propagation rule: a vertex joins the closure
/// when it shares an edge with a closure vertex and that edge's label is in
/// the closure. Edge orientation is ignored. Worklist-driven with
/// label-indexed edge buckets, so each edge is revisited only when one of
/// its three relevant vertices arrives. Throws UnknownVertexError for seeds
/// outside the graph.
ReachabilityResult closure(const LogGraph& g, std::span<const int> seed);
ReachabilityResult closure(const LogGraph& g, std::initializer_list<int> seed);
ReachabilityResult closure_by_name(const LogGraph& g, const std::vector<std::string>& seed);

/// True iff the closure covers every vertex. On connected interior-reduced
/// graphs this exits as soon as m-1 vertices are reached: a closure of size
/// m-1 always finishes, so the count alone decides the answer.
bool is_reachable_from(const LogGraph& g, std::span<const int> seed);
bool is_reachable_from(const LogGraph& g, std::initializer_list<int> seed);

}  // namespace lotkit
