#include "lotkit/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace lotkit {

namespace {

// Companion candidate for one role assignment of the queried edge.
struct Candidate {
    int companion;
    RosebrockSubLot part;
};

std::vector<int> component_of(const LogGraph& g, int start, const std::vector<char>& edge_alive) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{start};
    std::vector<int> out;
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int e : g.incident_edges(v)) {
            if (!edge_alive[e]) continue;
            int u = g.edge_other_end(e, v);
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return out;
}

}  // namespace

bool is_rosebrock(const LogGraph& g) {
    if (g.vertex_count() != 3 || g.edge_count() != 2) return false;
    const LabeledEdge& e0 = g.edge(0);
    const LabeledEdge& e1 = g.edge(1);

    // Two edges over three vertices share exactly one vertex.
    int shared = -1;
    for (int v : {e0.source, e0.target}) {
        if (v == e1.source || v == e1.target) shared = v;
    }
    if (shared < 0) return false;
    int p = g.edge_other_end(0, shared);
    int q = g.edge_other_end(1, shared);
    if (p == q) return false;
    return e0.label == q && e1.label == p;
}

std::optional<RosebrockSubLot> rosebrock_cover(const LogGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count()) {
        throw UnknownEdgeError("edge index " + std::to_string(edge_index) + " out of range");
    }
    const LabeledEdge& e = g.edge(edge_index);
    const int u = e.source;
    const int v = e.target;
    const int w = e.label;
    if (w == u || w == v) return std::nullopt;  // the pattern needs a third vertex as label

    // The pattern is palindromic, so the four role assignments reduce to
    // two companion edges: {v,w} labeled u, or {u,w} labeled v.
    std::vector<Candidate> found;
    if (auto c = g.edge_between(v, w); c && g.edge(*c).label == u) {
        found.push_back({*c, {u, v, w, edge_index, *c}});
    }
    if (auto c = g.edge_between(u, w); c && g.edge(*c).label == v) {
        found.push_back({*c, {v, u, w, edge_index, *c}});
    }
    if (found.empty()) return std::nullopt;
    auto best = std::min_element(found.begin(), found.end(),
                                 [](const Candidate& a, const Candidate& b) {
                                     return a.companion < b.companion;
                                 });
    return best->part;
}

LogGraph compose(const LogGraph& g1, std::string_view v1, const LogGraph& g2,
                 std::string_view v2) {
    g1.require_vertex(v1);
    const int i2 = g2.require_vertex(v2);
    for (const auto& name : g2.vertex_names()) {
        if (g1.find_vertex(name)) {
            throw NameClashError("vertex '" + name + "' appears in both graphs");
        }
    }

    auto mapped = [&](int v) -> std::string {
        return v == i2 ? std::string(v1) : g2.vertex_name(v);
    };

    GraphData out;
    out.vertices = g1.vertex_names();
    for (int v = 0; v < g2.vertex_count(); ++v) {
        if (v != i2) out.vertices.push_back(g2.vertex_name(v));
    }
    for (const auto& e : g1.edges()) {
        out.edges.push_back({g1.vertex_name(e.source), g1.vertex_name(e.target),
                             g1.vertex_name(e.label)});
    }
    for (const auto& e : g2.edges()) {
        out.edges.push_back({mapped(e.source), mapped(e.target), mapped(e.label)});
    }
    return LogGraph::from_data(out);
}

std::optional<Decomposition> decompose(const LogGraph& g) {
    return decompose_with_rank(g, {});
}

std::optional<Decomposition> decompose_with_rank(const LogGraph& g,
                                                 std::span<const int> leaf_rank) {
    if (!g.is_tree()) throw NotTreeError("decompose requires a connected tree");
    if (!g.is_interior_reduced()) {
        throw NotInteriorReducedError("decompose requires an interior-reduced tree");
    }
    const int m = g.vertex_count();
    if (m % 2 == 0) return std::nullopt;  // m-1 odd edges cannot pair up

    std::vector<int> rank(m);
    if (leaf_rank.empty()) {
        std::iota(rank.begin(), rank.end(), 0);
    } else {
        if (static_cast<int>(leaf_rank.size()) != m) {
            throw InvalidSizeError("leaf_rank needs one entry per vertex");
        }
        rank.assign(leaf_rank.begin(), leaf_rank.end());
    }

    std::vector<char> alive(g.edge_count(), 1);
    std::vector<int> degree(m, 0);
    for (const auto& e : g.edges()) {
        ++degree[e.source];
        ++degree[e.target];
    }

    auto kill = [&](int e) {
        alive[e] = 0;
        --degree[g.edge(e).source];
        --degree[g.edge(e).target];
    };

    std::vector<RosebrockSubLot> parts;
    std::vector<std::vector<int>> pending;
    {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        pending.push_back(std::move(all));
    }

    while (!pending.empty()) {
        std::vector<int> comp = std::move(pending.back());
        pending.pop_back();
        if (comp.size() == 1) continue;

        int leaf = -1;
        for (int v : comp) {
            if (degree[v] == 1 && (leaf < 0 || rank[v] < rank[leaf])) leaf = v;
        }
        if (leaf < 0) throw Error("internal: tree component without a leaf");

        int e1 = -1;
        for (int e : g.incident_edges(leaf)) {
            if (alive[e]) e1 = e;
        }
        const int b = g.edge_other_end(e1, leaf);
        const int c = g.edge(e1).label;

        auto e2 = g.edge_between(b, c);
        if (!e2 || !alive[*e2] || g.edge(*e2).label != leaf) return std::nullopt;

        parts.push_back({leaf, b, c, e1, *e2});
        kill(e1);
        kill(*e2);
        pending.push_back(component_of(g, b, alive));
        pending.push_back(component_of(g, c, alive));
    }

    // Order the parts so each one touches the union of its predecessors,
    // and record the touching vertex. Two shared vertices would close a
    // cycle in the tree, so the shared vertex is unique.
    Decomposition result;
    if (parts.empty()) return result;  // single vertex, zero parts

    std::vector<char> used(parts.size(), 0);
    std::vector<char> seen_vertex(m, 0);
    result.parts.push_back(parts[0]);
    used[0] = 1;
    for (int v : {parts[0].a, parts[0].b, parts[0].c}) seen_vertex[v] = 1;

    while (result.parts.size() < parts.size()) {
        bool progress = false;
        for (std::size_t i = 0; i < parts.size() && !progress; ++i) {
            if (used[i]) continue;
            int shared = -1;
            for (int v : {parts[i].a, parts[i].b, parts[i].c}) {
                if (seen_vertex[v]) shared = v;
            }
            if (shared < 0) continue;
            result.identifications.emplace_back(static_cast<int>(result.parts.size()), shared);
            result.parts.push_back(parts[i]);
            for (int v : {parts[i].a, parts[i].b, parts[i].c}) seen_vertex[v] = 1;
            used[i] = 1;
            progress = true;
        }
        if (!progress) throw Error("internal: decomposition parts do not connect");
    }
    return result;
}

bool is_maximal_complexity(const LogGraph& g) { return decompose(g).has_value(); }

LogGraph recompose(const LogGraph& g, const Decomposition& d) {
    if (d.parts.empty()) {
        if (g.vertex_count() == 1) return g;
        throw InvalidSizeError("an empty decomposition only reconstructs a single vertex");
    }

    auto part_graph = [&](const RosebrockSubLot& p, int renamed_vertex,
                          const std::string& fresh) {
        std::vector<int> verts{p.a, p.b, p.c};
        std::sort(verts.begin(), verts.end());
        auto name_of = [&](int v) {
            return v == renamed_vertex ? fresh : g.vertex_name(v);
        };
        GraphData data;
        for (int v : verts) data.vertices.push_back(name_of(v));
        for (int e : {std::min(p.edge_ab, p.edge_bc), std::max(p.edge_ab, p.edge_bc)}) {
            const LabeledEdge& ed = g.edge(e);
            data.edges.push_back({name_of(ed.source), name_of(ed.target), name_of(ed.label)});
        }
        return LogGraph::from_data(data);
    };

    LogGraph acc = part_graph(d.parts[0], -1, "");
    for (std::size_t i = 1; i < d.parts.size(); ++i) {
        if (d.identifications.size() < i ||
            d.identifications[i - 1].first != static_cast<int>(i)) {
            throw MalformedGraphError("decomposition identifications out of order");
        }
        const int shared = d.identifications[i - 1].second;
        const RosebrockSubLot& p = d.parts[i];
        auto taken = [&](const std::string& name) {
            return acc.find_vertex(name).has_value() || name == g.vertex_name(p.a) ||
                   name == g.vertex_name(p.b) || name == g.vertex_name(p.c);
        };
        std::string fresh = g.vertex_name(shared) + "__p" + std::to_string(i);
        while (taken(fresh)) fresh += '_';
        LogGraph part = part_graph(p, shared, fresh);
        acc = compose(acc, g.vertex_name(shared), part, fresh);
    }
    return acc;
}

}  // namespace lotkit
