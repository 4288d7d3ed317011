#include "lotkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace lotkit {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    unsigned char head = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(head) && s[0] != '_') return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (!std::isalnum(c) && s[i] != '_') return false;
    }
    return true;
}

long long pair_key(int u, int v, int m) {
    int lo = std::min(u, v);
    int hi = std::max(u, v);
    return static_cast<long long>(lo) * m + hi;
}

// Connectivity over an undirected edge list; a graph with no vertices is
// not considered connected.
bool edges_connect(int m, const std::vector<LabeledEdge>& edges) {
    if (m == 0) return false;
    std::vector<std::vector<int>> adj(m);
    for (const auto& e : edges) {
        adj[e.source].push_back(e.target);
        adj[e.target].push_back(e.source);
    }
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == m;
}

}  // namespace

ValidationReport validate(const GraphData& data) {
    ValidationReport rep;

    std::unordered_map<std::string, int> index;
    std::vector<std::string> names;
    for (const auto& name : data.vertices) {
        if (!valid_name(name)) {
            rep.violations.push_back(
                {ViolationKind::bad_name, -1, "invalid vertex name '" + name + "'"});
            continue;
        }
        if (index.count(name)) {
            rep.violations.push_back(
                {ViolationKind::duplicate_vertex, -1, "duplicate vertex '" + name + "'"});
            continue;
        }
        index.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
    }

    const int m = static_cast<int>(names.size());
    std::unordered_set<long long> pairs;
    std::vector<LabeledEdge> clean;
    std::vector<int> origin;  // position of each clean edge in data.edges
    for (std::size_t i = 0; i < data.edges.size(); ++i) {
        const auto& spec = data.edges[i];
        auto resolve = [&](const std::string& n) -> int {
            auto it = index.find(n);
            return it == index.end() ? -1 : it->second;
        };
        int s = resolve(spec.source);
        int t = resolve(spec.target);
        int l = resolve(spec.label);
        if (s < 0 || t < 0 || l < 0) {
            const std::string& missing = s < 0 ? spec.source : (t < 0 ? spec.target : spec.label);
            rep.violations.push_back({ViolationKind::unknown_vertex, static_cast<int>(i),
                                      "edge " + std::to_string(i) + " references unknown vertex '" +
                                          missing + "'"});
            continue;
        }
        if (s == t) {
            rep.violations.push_back({ViolationKind::self_loop, static_cast<int>(i),
                                      "self-loop at vertex '" + spec.source + "'"});
            continue;
        }
        long long key = pair_key(s, t, m);
        if (!pairs.insert(key).second) {
            rep.violations.push_back({ViolationKind::duplicate_edge, static_cast<int>(i),
                                      "second edge between '" + spec.source + "' and '" +
                                          spec.target + "'"});
            continue;
        }
        clean.push_back({s, t, l});
        origin.push_back(static_cast<int>(i));
    }

    rep.connected = edges_connect(m, clean);
    rep.tree = rep.connected && static_cast<int>(clean.size()) == m - 1;

    rep.interior_reduced = true;
    for (std::size_t j = 0; j < clean.size(); ++j) {
        const auto& e = clean[j];
        if (e.label == e.source || e.label == e.target) {
            rep.interior_reduced = false;
            rep.interior_violations.push_back(origin[j]);
        }
    }

    std::vector<int> label_use(m, 0);
    rep.injective = true;
    for (const auto& e : clean) {
        if (++label_use[e.label] > 1) rep.injective = false;
    }

    return rep;
}

ValidationReport validate(const LogGraph& g) { return validate(g.to_data()); }

LogGraph LogGraph::from_data(const GraphData& data) {
    if (data.vertices.empty()) {
        throw MalformedGraphError("a graph needs at least one vertex");
    }
    ValidationReport rep = validate(data);
    if (!rep.structurally_valid()) {
        const Violation& v = rep.violations.front();
        if (v.kind == ViolationKind::duplicate_edge) throw DuplicateEdgeError(v.message);
        throw MalformedGraphError(v.message);
    }

    LogGraph g;
    g.names_ = data.vertices;
    for (int i = 0; i < static_cast<int>(g.names_.size()); ++i) {
        g.index_.emplace(g.names_[i], i);
    }
    const int m = g.vertex_count();
    g.incident_.resize(m);
    g.labeled_.resize(m);
    for (const auto& spec : data.edges) {
        int s = g.index_.at(spec.source);
        int t = g.index_.at(spec.target);
        int l = g.index_.at(spec.label);
        int e = static_cast<int>(g.edges_.size());
        g.edges_.push_back({s, t, l});
        g.incident_[s].push_back(e);
        g.incident_[t].push_back(e);
        g.labeled_[l].push_back(e);
        g.pair_edge_.emplace(pair_key(s, t, m), e);
    }
    g.connected_ = rep.connected;
    g.tree_ = rep.tree;
    g.interior_reduced_ = rep.interior_reduced;
    g.injective_ = rep.injective;
    return g;
}

std::optional<int> LogGraph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int LogGraph::require_vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw UnknownVertexError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::optional<int> LogGraph::edge_between(int u, int v) const {
    auto it = pair_edge_.find(pair_key(u, v, vertex_count()));
    if (it == pair_edge_.end()) return std::nullopt;
    return it->second;
}

int LogGraph::edge_other_end(int e, int v) const {
    const LabeledEdge& ed = edges_[e];
    return ed.source == v ? ed.target : ed.source;
}

GraphData LogGraph::to_data() const {
    GraphData data;
    data.vertices = names_;
    data.edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        data.edges.push_back({names_[e.source], names_[e.target], names_[e.label]});
    }
    return data;
}

LogGraph spanning_tree(const LogGraph& g) {
    if (!g.is_connected()) {
        throw DisconnectedError("spanning_tree requires a connected graph");
    }
    const int m = g.vertex_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    GraphData out;
    out.vertices = g.vertex_names();
    for (const auto& e : g.edges()) {
        int rs = find(e.source);
        int rt = find(e.target);
        if (rs == rt) continue;  // would close a cycle
        parent[rs] = rt;
        out.edges.push_back({g.vertex_name(e.source), g.vertex_name(e.target),
                             g.vertex_name(e.label)});
    }
    return LogGraph::from_data(out);
}

LogGraph induced_subgraph(const LogGraph& g, std::span<const int> vertices) {
    std::vector<int> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count()) {
            throw UnknownVertexError("vertex index " + std::to_string(v) + " out of range");
        }
    }
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : keep) in[v] = 1;

    GraphData out;
    for (int v : keep) out.vertices.push_back(g.vertex_name(v));
    for (const auto& e : g.edges()) {
        if (!in[e.source] || !in[e.target]) continue;
        if (!in[e.label]) {
            throw MalformedGraphError("edge label '" + g.vertex_name(e.label) +
                                      "' falls outside the induced subgraph");
        }
        out.edges.push_back({g.vertex_name(e.source), g.vertex_name(e.target),
                             g.vertex_name(e.label)});
    }
    return LogGraph::from_data(out);
}

bool same_log(const LogGraph& a, const LogGraph& b) {
    std::vector<std::string> na = a.vertex_names();
    std::vector<std::string> nb = b.vertex_names();
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;

    using Triple = std::tuple<std::string, std::string, std::string>;
    auto triples = [](const LogGraph& g) {
        std::vector<Triple> out;
        out.reserve(g.edge_count());
        for (const auto& e : g.edges()) {
            out.emplace_back(g.vertex_name(e.source), g.vertex_name(e.target),
                             g.vertex_name(e.label));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return triples(a) == triples(b);
}

}  // namespace lotkit
