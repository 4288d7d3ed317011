#include "lotkit/complexity.hpp"

#include <algorithm>
#include <numeric>

#include "lotkit/decomposition.hpp"
#include "lotkit/reachability.hpp"

namespace lotkit {

namespace {

std::vector<char> marks_of(const LogGraph& g, const ReachabilityResult& res) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : res.closure) in[v] = 1;
    return in;
}

// Lowest-index label among edges crossing the closure boundary. At an
// incomplete fixed point such a label is never inside the closure: if it
// were, the outside endpoint would have been reached.
int min_boundary_label(const LogGraph& g, const std::vector<char>& in) {
    int best = -1;
    for (const auto& e : g.edges()) {
        if (in[e.source] == in[e.target]) continue;
        if (best < 0 || e.label < best) best = e.label;
    }
    return best;
}

// Shared greedy loop: extend `chosen` by boundary labels until complete.
ReachabilityResult greedy_extend(const LogGraph& g, std::vector<int>& chosen) {
    ReachabilityResult res = closure(g, std::span<const int>(chosen));
    while (!res.complete) {
        std::vector<char> in = marks_of(g, res);
        int label = min_boundary_label(g, in);
        if (label < 0 || in[label]) {
            throw Error("internal: no usable boundary edge on an incomplete closure");
        }
        chosen.push_back(label);
        res = closure(g, std::span<const int>(chosen));
    }
    return res;
}

ComplexityReport finish_report(const LogGraph& g, std::vector<int> chosen, Method method) {
    ComplexityReport rep;
    std::sort(chosen.begin(), chosen.end());
    rep.value = static_cast<int>(chosen.size());
    rep.witness = std::move(chosen);
    rep.method = method;
    rep.lower_bound = complexity_bounds(g).lower;
    return rep;
}

// Complete witness without interior-reducedness: any single vertex plus the
// whole label image lets propagation cross every edge.
std::vector<int> label_image_witness(const LogGraph& g) {
    std::vector<char> in(g.vertex_count(), 0);
    in[0] = 1;
    for (const auto& e : g.edges()) in[e.label] = 1;
    std::vector<int> s;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) s.push_back(v);
    }
    if (static_cast<int>(s.size()) >= g.vertex_count()) {
        s.resize(g.vertex_count());
        std::iota(s.begin(), s.end(), 0);
    }
    return s;
}

// Advances a lexicographic k-combination of 0..m-1; false when exhausted.
bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace

ComplexityReport greedy_seed(const LogGraph& g) {
    if (!g.is_connected()) throw DisconnectedError("greedy_seed requires a connected graph");
    if (!g.is_interior_reduced()) {
        throw NotInteriorReducedError("greedy_seed requires an interior-reduced graph");
    }
    std::vector<int> chosen{0};
    greedy_extend(g, chosen);
    return finish_report(g, std::move(chosen), Method::greedy);
}

ComplexityBounds complexity_bounds(const LogGraph& g, std::optional<int> greedy_value) {
    if (!g.is_connected()) throw DisconnectedError("complexity_bounds requires a connected graph");
    const int m = g.vertex_count();

    ComplexityBounds b;
    b.lower = (g.is_interior_reduced() && m >= 2) ? 2 : 1;

    std::vector<char> in_image(m, 0);
    int image = 0;
    for (const auto& e : g.edges()) {
        if (!in_image[e.label]) {
            in_image[e.label] = 1;
            ++image;
        }
    }
    int upper = std::min(m, 1 + image);
    if (g.is_interior_reduced()) upper = std::min(upper, max_seed_bound(m));
    if (greedy_value) upper = std::min(upper, *greedy_value);
    b.upper = upper;
    return b;
}

ComplexityReport exact_complexity(const LogGraph& g, const ExactOptions& opts) {
    if (!g.is_connected()) throw DisconnectedError("exact_complexity requires a connected graph");
    const int m = g.vertex_count();
    if (m > opts.max_vertices && !opts.allow_large) {
        throw GraphTooLargeError("exact search refused for m = " + std::to_string(m) +
                                 " (> " + std::to_string(opts.max_vertices) +
                                 "); set allow_large to override");
    }

    // Best constructive upper-bound witness; it caps the search depth.
    ComplexityReport upper;
    if (g.is_interior_reduced()) {
        upper = greedy_seed(g);
    } else {
        std::vector<int> s = label_image_witness(g);
        upper = finish_report(g, std::move(s), Method::trivial_bound);
    }

    int cap = upper.value;
    bool budget_hit = false;
    if (opts.budget && *opts.budget < cap) {
        cap = std::max(*opts.budget, 0);
        budget_hit = true;
    }

    std::uint64_t examined = 0;
    for (int k = 1; k <= cap; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        do {
            ++examined;
            if (is_reachable_from(g, std::span<const int>(comb))) {
                ComplexityReport rep;
                rep.value = k;
                rep.witness = comb;
                rep.method = Method::exact;
                rep.lower_bound = k;
                rep.subsets_examined = examined;
                return rep;
            }
        } while (next_combination(comb, m));
    }

    if (!budget_hit) {
        // The upper witness has size cap, so the k = cap round must have hit.
        throw Error("internal: exact search missed its own upper-bound witness");
    }
    ComplexityReport rep = upper;
    rep.method = Method::trivial_bound;
    rep.lower_bound = std::max(rep.lower_bound, cap + 1);
    rep.subsets_examined = examined;
    return rep;
}

ComplexityReport submaximal_seed(const LogGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count()) {
        throw UnknownEdgeError("edge index " + std::to_string(edge_index) + " out of range");
    }
    if (!g.is_tree()) throw NotTreeError("submaximal_seed requires a tree");
    if (!g.is_interior_reduced()) {
        throw NotInteriorReducedError("submaximal_seed requires an interior-reduced tree");
    }
    const int m = g.vertex_count();
    if (m % 2 == 0) {
        throw InvalidSizeError("submaximal_seed applies to odd vertex counts only");
    }
    if (rosebrock_cover(g, edge_index)) {
        throw EdgeIsCoveredError("edge " + std::to_string(edge_index) +
                                 " lies in a Rosebrock sub-LOT");
    }

    const LabeledEdge& e = g.edge(edge_index);
    const int z = e.label;

    // Removing e splits the tree; z sits on exactly one side. Call that
    // side's endpoint x and walk the unique z -> x path (it avoids e).
    std::vector<int> parent_edge(m, -1);
    std::vector<char> seen(m, 0);
    std::vector<int> stack{z};
    seen[z] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : g.incident_edges(v)) {
            if (ei == edge_index) continue;
            int u = g.edge_other_end(ei, v);
            if (!seen[u]) {
                seen[u] = 1;
                parent_edge[u] = ei;
                stack.push_back(u);
            }
        }
    }
    const int x = seen[e.source] ? e.source : e.target;
    const int y = g.edge_other_end(edge_index, x);

    SubmaxCase fired;
    std::vector<int> chosen;

    if (auto adj = g.edge_between(z, x)) {
        // z touches an endpoint of e; its label w completes {z,w,x,y} at
        // once (w = y would make the pair a Rosebrock sub-LOT, excluded by
        // the precondition).
        fired = SubmaxCase::label_adjacent;
        chosen = {z, g.edge(*adj).label};
    } else {
        std::vector<int> path_edges;
        for (int v = x; v != z; v = g.edge_other_end(parent_edge[v], v)) {
            path_edges.push_back(parent_edge[v]);
        }
        std::reverse(path_edges.begin(), path_edges.end());
        const int k = static_cast<int>(path_edges.size());

        if (g.edge(path_edges[k - 1]).label == y) {
            // The far endpoint labels the final path edge: z plus either
            // endpoint of e reaches both of them and the path vertex next
            // to x.
            fired = SubmaxCase::path_final_hit;
            chosen = {z, std::min(x, y)};
        } else {
            fired = SubmaxCase::path_labels_clear;
            for (int i = 0; i + 1 < k; ++i) {
                int lab = g.edge(path_edges[i]).label;
                if (lab == x || lab == y) {
                    // an endpoint of e labels an interior path edge: the
                    // step that buys it collects x, y and the next path
                    // vertex at once
                    fired = SubmaxCase::path_interior_hit;
                    break;
                }
            }
            // Walk toward x, paying only for path edges whose far endpoint
            // is still unreached. Such an edge's label is unreached too
            // (otherwise the far endpoint would already have followed), so
            // every paid step gains the label and the endpoint together,
            // and reaching x hands over y through the uncovered edge.
            chosen = {z};
            ReachabilityResult res = closure(g, std::span<const int>(chosen));
            int cur = z;
            for (int i = 0; i < k; ++i) {
                int far = g.edge_other_end(path_edges[i], cur);
                if (res.complete || res.contains(x)) break;
                if (!res.contains(far)) {
                    chosen.push_back(g.edge(path_edges[i]).label);
                    res = closure(g, std::span<const int>(chosen));
                }
                cur = far;
            }
        }
    }

    greedy_extend(g, chosen);
    ComplexityReport rep = finish_report(g, std::move(chosen), Method::greedy);
    rep.submax_case = fired;
    return rep;
}

}  // namespace lotkit
