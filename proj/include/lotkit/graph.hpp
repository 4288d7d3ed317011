#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lotkit/errors.hpp"

namespace lotkit {

/// A directed labeled edge. All three fields are dense vertex indices into
/// the owning graph; the label is a vertex, not free-form data.
struct LabeledEdge {
    int source = -1;
    int target = -1;
    int label = -1;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Name-based edge description used before a graph exists.
struct EdgeSpec {
    std::string source;
    std::string target;
    std::string label;
};

/// Raw, unvalidated graph description (parser output, fixture literals).
struct GraphData {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
};

enum class ViolationKind {
    bad_name,
    duplicate_vertex,
    unknown_vertex,
    self_loop,
    duplicate_edge,
};

struct Violation {
    ViolationKind kind;
    int edge = -1;  // offending edge index, -1 for vertex-level problems
    std::string message;
};

/// Result of validate(). `violations` holds structural problems only and is
/// empty exactly when the input is a simple LOG whose endpoints and labels
/// are all declared vertices. Edges whose label sits on one of their own
/// endpoints are legal LOG edges; they are listed in `interior_violations`
/// and only clear the interior_reduced flag.
struct ValidationReport {
    bool connected = false;
    bool tree = false;
    bool interior_reduced = false;
    bool injective = false;
    std::vector<Violation> violations;
    std::vector<int> interior_violations;

    bool structurally_valid() const { return violations.empty(); }
};

/// A labeled oriented graph. Immutable after construction, so instances can
/// be shared freely across threads. Vertex identity is the name; the dense
/// index is an internal handle assigned in declaration order.
///
/// Construction rejects anything that is not a simple LOG: self-loops,
/// parallel edges (per unordered pair), and references to undeclared
/// vertices all throw. Interior-reducedness and injectivity are not
/// requirements, only cached flags.
class LogGraph {
public:
    static LogGraph from_data(const GraphData& data);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    std::optional<int> find_vertex(std::string_view name) const;
    /// Like find_vertex but throws UnknownVertexError.
    int require_vertex(std::string_view name) const;

    const std::vector<LabeledEdge>& edges() const { return edges_; }
    const LabeledEdge& edge(int e) const { return edges_[e]; }
    /// The unique edge between an unordered vertex pair, if present.
    std::optional<int> edge_between(int u, int v) const;
    int edge_other_end(int e, int v) const;

    /// Edge indices incident to v (either endpoint, orientation ignored).
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    /// Edge indices whose label is v.
    const std::vector<int>& edges_labeled(int v) const { return labeled_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }

    bool is_connected() const { return connected_; }
    bool is_tree() const { return tree_; }
    bool is_interior_reduced() const { return interior_reduced_; }
    bool is_injective() const { return injective_; }

    GraphData to_data() const;

    /// Strict equality: identical vertex order and identical edge list.
    bool operator==(const LogGraph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

private:
    LogGraph() = default;

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<LabeledEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> labeled_;
    std::unordered_map<long long, int> pair_edge_;
    bool connected_ = false;
    bool tree_ = false;
    bool interior_reduced_ = false;
    bool injective_ = false;
};

/// Full structural check of a candidate graph. Pure: repeated calls yield
/// the same report. Flags are computed on the subgraph of clean edges when
/// structural violations are present.
ValidationReport validate(const GraphData& data);

/// Report for an already-constructed graph (never has structural violations).
ValidationReport validate(const LogGraph& g);

/// Sub-LOG on the same vertices with m-1 edges forming a tree. Edges are
/// kept in input order; cycle-closing edges are dropped, which makes the
/// result deterministic. Throws DisconnectedError.
LogGraph spanning_tree(const LogGraph& g);

/// Subgraph induced by the given vertex indices (taken as a set; result
/// keeps the original relative vertex order). Every kept edge must have its
/// label inside the subset, otherwise the result would not be a LOG over
/// the restricted vertex set and MalformedGraphError is thrown.
LogGraph induced_subgraph(const LogGraph& g, std::span<const int> vertices);

/// Equality up to vertex/edge ordering: same vertex-name set and the same
/// multiset of (source, target, label) name triples.
bool same_log(const LogGraph& a, const LogGraph& b);

}  // namespace lotkit
