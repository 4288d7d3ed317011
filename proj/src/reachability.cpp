#include "lotkit/reachability.hpp"

#include <algorithm>

namespace lotkit {

namespace {

struct Work {
    std::vector<char> in;
    std::vector<int> order;  // discovery order, seeds first
    std::vector<TraceStep> trace;
    int count = 0;
};

// Fixed-point worklist. Every edge {p,q} labeled w fires an endpoint once
// the other endpoint and w are both in; the firing happens when the later
// of those two vertices is processed, so each edge is looked at O(1) times
// per relevant vertex. stop_count < 0 means run to the fixed point.
Work run(const LogGraph& g, std::span<const int> seed, int stop_count) {
    const int m = g.vertex_count();
    Work w;
    w.in.assign(m, 0);

    std::vector<int> queue;
    queue.reserve(m);
    for (int v : seed) {
        if (v < 0 || v >= m) {
            throw UnknownVertexError("seed vertex index " + std::to_string(v) + " out of range");
        }
        if (!w.in[v]) {
            w.in[v] = 1;
            ++w.count;
            w.order.push_back(v);
            queue.push_back(v);
        }
    }

    auto reach = [&](int v, int e) {
        w.in[v] = 1;
        ++w.count;
        w.order.push_back(v);
        w.trace.push_back({v, e, g.edge(e).label});
        queue.push_back(v);
    };

    std::size_t head = 0;
    while (head < queue.size()) {
        if (stop_count >= 0 && w.count >= stop_count) break;
        int v = queue[head++];
        for (int e : g.incident_edges(v)) {
            const LabeledEdge& ed = g.edge(e);
            int other = ed.source == v ? ed.target : ed.source;
            if (!w.in[other] && w.in[ed.label]) reach(other, e);
        }
        for (int e : g.edges_labeled(v)) {
            const LabeledEdge& ed = g.edge(e);
            if (w.in[ed.source] && !w.in[ed.target]) reach(ed.target, e);
            if (w.in[ed.target] && !w.in[ed.source]) reach(ed.source, e);
        }
    }
    return w;
}

}  // namespace

bool ReachabilityResult::contains(int v) const {
    return std::binary_search(closure.begin(), closure.end(), v);
}

ReachabilityResult closure(const LogGraph& g, std::span<const int> seed) {
    Work w = run(g, seed, -1);

    ReachabilityResult res;
    res.seed.assign(seed.begin(), seed.end());
    std::sort(res.seed.begin(), res.seed.end());
    res.seed.erase(std::unique(res.seed.begin(), res.seed.end()), res.seed.end());
    res.closure = w.order;
    std::sort(res.closure.begin(), res.closure.end());
    res.trace = std::move(w.trace);
    res.complete = w.count == g.vertex_count();
    return res;
}

ReachabilityResult closure(const LogGraph& g, std::initializer_list<int> seed) {
    std::vector<int> s(seed);
    return closure(g, std::span<const int>(s));
}

ReachabilityResult closure_by_name(const LogGraph& g, const std::vector<std::string>& seed) {
    std::vector<int> s;
    s.reserve(seed.size());
    for (const auto& name : seed) s.push_back(g.require_vertex(name));
    return closure(g, std::span<const int>(s));
}

bool is_reachable_from(const LogGraph& g, std::span<const int> seed) {
    const int m = g.vertex_count();
    // A count of m-1 already decides the question on connected
    // interior-reduced graphs with at least one edge: the remaining vertex
    // always follows.
    const int target =
        (m >= 2 && g.is_connected() && g.is_interior_reduced()) ? m - 1 : m;
    Work w = run(g, seed, target);
    return w.count >= target;
}

bool is_reachable_from(const LogGraph& g, std::initializer_list<int> seed) {
    std::vector<int> s(seed);
    return is_reachable_from(g, std::span<const int>(s));
}

}  // namespace lotkit
