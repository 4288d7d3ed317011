#include "lotkit/certify.hpp"

#include <algorithm>
#include <memory>

#include "lotkit/reachability.hpp"

namespace lotkit {

AmalgamEvidence::AmalgamEvidence() = default;
AmalgamEvidence::AmalgamEvidence(AmalgamEvidence&&) noexcept = default;
AmalgamEvidence& AmalgamEvidence::operator=(AmalgamEvidence&&) noexcept = default;
AmalgamEvidence::~AmalgamEvidence() = default;

namespace {

std::vector<int> labels_in_edge_order(const LogGraph& g) {
    std::vector<int> labels;
    labels.reserve(g.edge_count());
    for (const auto& e : g.edges()) labels.push_back(e.label);
    return labels;
}

// Branches hanging off v: one vertex set per incident edge, v excluded.
std::vector<std::vector<int>> branches_at(const LogGraph& g, int v) {
    std::vector<std::vector<int>> out;
    for (int e : g.incident_edges(v)) {
        int start = g.edge_other_end(e, v);
        std::vector<char> seen(g.vertex_count(), 0);
        seen[v] = 1;
        seen[start] = 1;
        std::vector<int> stack{start};
        std::vector<int> branch{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int f : g.incident_edges(u)) {
                int t = g.edge_other_end(f, u);
                if (!seen[t]) {
                    seen[t] = 1;
                    branch.push_back(t);
                    stack.push_back(t);
                }
            }
        }
        std::sort(branch.begin(), branch.end());
        out.push_back(std::move(branch));
    }
    return out;
}

// True when every edge inside the vertex set keeps its label inside too.
bool label_closed(const LogGraph& g, const std::vector<char>& side) {
    for (const auto& e : g.edges()) {
        if (side[e.source] && side[e.target] && !side[e.label]) return false;
    }
    return true;
}

// Every edge must live wholly on one side; the sides overlap only at the
// joint, which carries both marks.
bool split_partitions_edges(const LogGraph& g, const std::vector<char>& first,
                            const std::vector<char>& second) {
    for (const auto& e : g.edges()) {
        bool in_first = first[e.source] && first[e.target];
        bool in_second = second[e.source] && second[e.target];
        if (!in_first && !in_second) return false;
    }
    return true;
}

std::optional<AsphericityCertificate> try_amalgam(const LogGraph& g, Effort effort) {
    const int m = g.vertex_count();
    for (int v = 0; v < m; ++v) {
        if (g.degree(v) < 2) continue;
        std::vector<std::vector<int>> branches = branches_at(g, v);
        const int d = static_cast<int>(branches.size());
        if (d > 12) continue;  // keep the subset scan bounded

        // Group branches two ways; branch 0 is pinned to the first side so
        // mirrored splits are not retried.
        for (unsigned mask = 1; mask + 1 < (1u << d); mask += 2) {
            std::vector<char> first(m, 0);
            first[v] = 1;
            for (int b = 0; b < d; ++b) {
                if (mask & (1u << b)) {
                    for (int u : branches[b]) first[u] = 1;
                }
            }
            std::vector<char> second(m, 0);
            for (int u = 0; u < m; ++u) second[u] = first[u] ? 0 : 1;
            second[v] = 1;
            if (!label_closed(g, first) || !label_closed(g, second)) continue;

            std::vector<int> first_vertices;
            std::vector<int> second_vertices;
            for (int u = 0; u < m; ++u) {
                if (first[u]) first_vertices.push_back(u);
                if (second[u]) second_vertices.push_back(u);
            }
            LogGraph g1 = induced_subgraph(g, first_vertices);
            LogGraph g2 = induced_subgraph(g, second_vertices);

            auto c1 = certify_aspherical(g1, effort);
            if (!c1) continue;
            auto c2 = certify_aspherical(g2, effort);
            if (!c2) continue;

            AsphericityCertificate cert;
            cert.reason = CertReason::amalgam_of_aspherical;
            AmalgamEvidence ev;
            ev.joint = v;
            ev.first_part = first_vertices;
            ev.first = std::make_unique<AsphericityCertificate>(std::move(*c1));
            ev.second = std::make_unique<AsphericityCertificate>(std::move(*c2));
            cert.amalgam_evidence = std::move(ev);
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<AsphericityCertificate> certify_aspherical(const LogGraph& g, Effort effort) {
    if (!g.is_tree()) throw NotTreeError("certify_aspherical requires a tree");
    if (!g.is_interior_reduced()) {
        throw NotInteriorReducedError("certify_aspherical requires an interior-reduced tree");
    }

    // Both structural conditions are cheap scans; the decomposition comes
    // first so a decomposable LOT is always reported as maximal complexity
    // even when its labeling happens to be injective too.
    if (auto d = decompose(g)) {
        AsphericityCertificate cert;
        cert.reason = CertReason::maximal_complexity;
        cert.decomposition_evidence = std::move(*d);
        return cert;
    }

    if (g.is_injective()) {
        AsphericityCertificate cert;
        cert.reason = CertReason::injective_labeling;
        cert.label_audit = labels_in_edge_order(g);
        return cert;
    }

    if (effort != Effort::exhaustive) return std::nullopt;

    try {
        ComplexityReport rep = exact_complexity(g);
        if (rep.method == Method::exact && rep.value == 2) {
            AsphericityCertificate cert;
            cert.reason = CertReason::complexity_two;
            cert.complexity_evidence = std::move(rep);
            return cert;
        }
    } catch (const GraphTooLargeError&) {
        // too big for the exact search; the amalgam route may still apply
    }

    return try_amalgam(g, effort);
}

bool verify_certificate(const LogGraph& g, const AsphericityCertificate& cert) {
    try {
        const int m = g.vertex_count();
        if (!g.is_tree() || !g.is_interior_reduced()) return false;

        switch (cert.reason) {
            case CertReason::injective_labeling: {
                if (!g.is_injective()) return false;
                return cert.label_audit == labels_in_edge_order(g);
            }

            case CertReason::complexity_two: {
                if (!cert.complexity_evidence) return false;
                const ComplexityReport& rep = *cert.complexity_evidence;
                if (rep.method != Method::exact || rep.value != 2) return false;
                if (static_cast<int>(rep.witness.size()) != 2 || m < 2) return false;
                // Interior-reduced with m >= 2 puts cp at 2 or more, so a
                // complete two-vertex witness pins cp to exactly 2.
                return closure(g, std::span<const int>(rep.witness)).complete;
            }

            case CertReason::maximal_complexity: {
                if (!cert.decomposition_evidence) return false;
                const Decomposition& d = *cert.decomposition_evidence;
                if (d.part_count() * 2 != g.edge_count()) return false;
                if (d.part_count() != (m - 1) / 2 || m % 2 == 0) return false;

                std::vector<char> edge_used(g.edge_count(), 0);
                for (const auto& p : d.parts) {
                    if (p.edge_ab < 0 || p.edge_ab >= g.edge_count()) return false;
                    if (p.edge_bc < 0 || p.edge_bc >= g.edge_count()) return false;
                    if (edge_used[p.edge_ab]++ || edge_used[p.edge_bc]++) return false;
                    if (p.a == p.b || p.b == p.c || p.a == p.c) return false;
                    const LabeledEdge& ab = g.edge(p.edge_ab);
                    const LabeledEdge& bc = g.edge(p.edge_bc);
                    if (std::min(ab.source, ab.target) != std::min(p.a, p.b) ||
                        std::max(ab.source, ab.target) != std::max(p.a, p.b)) {
                        return false;
                    }
                    if (std::min(bc.source, bc.target) != std::min(p.b, p.c) ||
                        std::max(bc.source, bc.target) != std::max(p.b, p.c)) {
                        return false;
                    }
                    if (ab.label != p.c || bc.label != p.a) return false;
                }
                return same_log(recompose(g, d), g);
            }

            case CertReason::amalgam_of_aspherical: {
                if (!cert.amalgam_evidence) return false;
                const AmalgamEvidence& ev = *cert.amalgam_evidence;
                if (!ev.first || !ev.second) return false;
                if (ev.joint < 0 || ev.joint >= m) return false;

                std::vector<char> first(m, 0);
                for (int v : ev.first_part) {
                    if (v < 0 || v >= m) return false;
                    first[v] = 1;
                }
                if (!first[ev.joint]) return false;
                std::vector<int> second_vertices;
                std::vector<char> second(m, 0);
                for (int v = 0; v < m; ++v) {
                    if (!first[v] || v == ev.joint) {
                        second[v] = 1;
                        second_vertices.push_back(v);
                    }
                }
                if (static_cast<int>(ev.first_part.size()) < 2 || second_vertices.size() < 2) {
                    return false;
                }
                if (static_cast<int>(ev.first_part.size()) + static_cast<int>(second_vertices.size()) !=
                    m + 1) {
                    return false;
                }
                // Edges must split cleanly by side; labels must stay inside
                // their side for both halves to be LOGs of their own.
                if (!split_partitions_edges(g, first, second)) return false;
                if (!label_closed(g, first) || !label_closed(g, second)) return false;

                LogGraph g1 = induced_subgraph(g, ev.first_part);
                LogGraph g2 = induced_subgraph(g, second_vertices);
                if (!g1.is_tree() || !g2.is_tree()) return false;
                if (!verify_certificate(g1, *ev.first)) return false;
                if (!verify_certificate(g2, *ev.second)) return false;

                // Replay the identification and compare against g.
                const std::string joint_name = g.vertex_name(ev.joint);
                GraphData renamed = g2.to_data();
                std::string fresh = joint_name + "__half";
                auto clash = [&](const std::string& n) {
                    if (g1.find_vertex(n)) return true;
                    return std::any_of(renamed.vertices.begin(), renamed.vertices.end(),
                                       [&](const std::string& v) { return v == n; });
                };
                while (clash(fresh)) fresh += '_';
                for (auto& v : renamed.vertices) {
                    if (v == joint_name) v = fresh;
                }
                for (auto& e : renamed.edges) {
                    if (e.source == joint_name) e.source = fresh;
                    if (e.target == joint_name) e.target = fresh;
                    if (e.label == joint_name) e.label = fresh;
                }
                LogGraph g2r = LogGraph::from_data(renamed);
                return same_log(compose(g1, joint_name, g2r, fresh), g);
            }
        }
        return false;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace lotkit
