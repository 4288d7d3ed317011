#include "lotkit/json_io.hpp"

#include <cstdio>

namespace lotkit {

namespace {

using nlohmann::json;

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::greedy: return "greedy";
        case Method::trivial_bound: return "trivial-bound";
    }
    return "?";
}

std::string submax_name(SubmaxCase c) {
    switch (c) {
        case SubmaxCase::label_adjacent: return "label-adjacent";
        case SubmaxCase::path_labels_clear: return "path-labels-clear";
        case SubmaxCase::path_interior_hit: return "path-interior-hit";
        case SubmaxCase::path_final_hit: return "path-final-hit";
    }
    return "?";
}

std::string reason_name(CertReason r) {
    switch (r) {
        case CertReason::complexity_two: return "complexity_two";
        case CertReason::maximal_complexity: return "maximal_complexity";
        case CertReason::injective_labeling: return "injective_labeling";
        case CertReason::amalgam_of_aspherical: return "amalgam_of_aspherical";
    }
    return "?";
}

json graph_to_json(const GraphDoc& d) {
    json edges = json::array();
    for (const auto& e : d.edges) edges.push_back({e[0], e[1], e[2]});
    return json{{"vertices", d.vertices}, {"edges", edges}};
}

GraphDoc graph_from_json(const json& j) {
    GraphDoc d;
    d.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
        d.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                           e.at(2).get<std::string>()});
    }
    return d;
}

json validation_to_json(const ValidationDoc& d) {
    return json{{"connected", d.connected},
                {"tree", d.tree},
                {"interior_reduced", d.interior_reduced},
                {"injective", d.injective},
                {"violations", d.violations},
                {"interior_violations", d.interior_violations}};
}

ValidationDoc validation_from_json(const json& j) {
    ValidationDoc d;
    d.connected = j.at("connected").get<bool>();
    d.tree = j.at("tree").get<bool>();
    d.interior_reduced = j.at("interior_reduced").get<bool>();
    d.injective = j.at("injective").get<bool>();
    d.violations = j.at("violations").get<std::vector<std::string>>();
    d.interior_violations = j.at("interior_violations").get<std::vector<int>>();
    return d;
}

json complexity_to_json(const ComplexityDoc& d) {
    json j{{"method", d.method},
           {"value", d.value},
           {"witness", d.witness},
           {"lower_bound", d.lower_bound},
           {"subsets_examined", d.subsets_examined}};
    if (!d.submax_case.empty()) j["case"] = d.submax_case;
    return j;
}

ComplexityDoc complexity_from_json(const json& j) {
    ComplexityDoc d;
    d.method = j.at("method").get<std::string>();
    d.value = j.at("value").get<int>();
    d.witness = j.at("witness").get<std::vector<std::string>>();
    d.lower_bound = j.at("lower_bound").get<int>();
    d.subsets_examined = j.at("subsets_examined").get<std::uint64_t>();
    if (j.contains("case")) d.submax_case = j.at("case").get<std::string>();
    return d;
}

json decomposition_to_json(const DecompositionDoc& d) {
    json parts = json::array();
    for (const auto& p : d.parts) {
        parts.push_back({{"a", p.a},
                         {"b", p.b},
                         {"c", p.c},
                         {"edge_ab", p.edge_ab},
                         {"edge_bc", p.edge_bc}});
    }
    json idents = json::array();
    for (const auto& i : d.identifications) {
        idents.push_back({{"part", i.part}, {"vertex", i.vertex}});
    }
    return json{{"s", d.s}, {"parts", parts}, {"identifications", idents}};
}

DecompositionDoc decomposition_from_json(const json& j) {
    DecompositionDoc d;
    d.s = j.at("s").get<int>();
    for (const auto& p : j.at("parts")) {
        d.parts.push_back({p.at("a").get<std::string>(), p.at("b").get<std::string>(),
                           p.at("c").get<std::string>(), p.at("edge_ab").get<int>(),
                           p.at("edge_bc").get<int>()});
    }
    for (const auto& i : j.at("identifications")) {
        d.identifications.push_back({i.at("part").get<int>(), i.at("vertex").get<std::string>()});
    }
    return d;
}

json certificate_to_json(const CertificateDoc& d) {
    json j{{"reason", d.reason}};
    json evidence = json::object();
    if (d.complexity) evidence["report"] = complexity_to_json(*d.complexity);
    if (d.decomposition) evidence["decomposition"] = decomposition_to_json(*d.decomposition);
    if (!d.labels.empty() || d.reason == "injective_labeling") evidence["labels"] = d.labels;
    if (!d.amalgam.empty()) {
        const AmalgamDoc& a = d.amalgam.front();
        json certs = json::array();
        for (const auto& c : a.certificates) certs.push_back(certificate_to_json(c));
        evidence["amalgam"] = json{{"joint", a.joint},
                                   {"first_part", a.first_part},
                                   {"certificates", certs}};
    }
    j["evidence"] = evidence;
    return j;
}

CertificateDoc certificate_from_json_impl(const json& j) {
    CertificateDoc d;
    d.reason = j.at("reason").get<std::string>();
    const json& ev = j.at("evidence");
    if (ev.contains("report")) d.complexity = complexity_from_json(ev.at("report"));
    if (ev.contains("decomposition")) {
        d.decomposition = decomposition_from_json(ev.at("decomposition"));
    }
    if (ev.contains("labels")) d.labels = ev.at("labels").get<std::vector<std::string>>();
    if (ev.contains("amalgam")) {
        const json& a = ev.at("amalgam");
        AmalgamDoc am;
        am.joint = a.at("joint").get<std::string>();
        am.first_part = a.at("first_part").get<std::vector<std::string>>();
        for (const auto& c : a.at("certificates")) {
            am.certificates.push_back(certificate_from_json_impl(c));
        }
        d.amalgam.push_back(std::move(am));
    }
    return d;
}

}  // namespace

GraphDoc make_graph_doc(const LogGraph& g) {
    GraphDoc d;
    d.vertices = g.vertex_names();
    for (const auto& e : g.edges()) {
        d.edges.push_back({g.vertex_name(e.source), g.vertex_name(e.target),
                           g.vertex_name(e.label)});
    }
    return d;
}

ValidationDoc make_validation_doc(const ValidationReport& rep) {
    ValidationDoc d;
    d.connected = rep.connected;
    d.tree = rep.tree;
    d.interior_reduced = rep.interior_reduced;
    d.injective = rep.injective;
    for (const auto& v : rep.violations) d.violations.push_back(v.message);
    d.interior_violations = rep.interior_violations;
    return d;
}

ComplexityDoc make_complexity_doc(const LogGraph& g, const ComplexityReport& rep) {
    ComplexityDoc d;
    d.method = method_name(rep.method);
    d.value = rep.value;
    for (int v : rep.witness) d.witness.push_back(g.vertex_name(v));
    d.lower_bound = rep.lower_bound;
    d.subsets_examined = rep.subsets_examined;
    if (rep.submax_case) d.submax_case = submax_name(*rep.submax_case);
    return d;
}

DecompositionDoc make_decomposition_doc(const LogGraph& g, const Decomposition& dec) {
    DecompositionDoc d;
    d.s = dec.part_count();
    for (const auto& p : dec.parts) {
        d.parts.push_back({g.vertex_name(p.a), g.vertex_name(p.b), g.vertex_name(p.c),
                           p.edge_ab, p.edge_bc});
    }
    for (const auto& [part, vertex] : dec.identifications) {
        d.identifications.push_back({part, g.vertex_name(vertex)});
    }
    return d;
}

CertificateDoc make_certificate_doc(const LogGraph& g, const AsphericityCertificate& cert) {
    CertificateDoc d;
    d.reason = reason_name(cert.reason);
    if (cert.complexity_evidence) {
        d.complexity = make_complexity_doc(g, *cert.complexity_evidence);
    }
    if (cert.decomposition_evidence) {
        d.decomposition = make_decomposition_doc(g, *cert.decomposition_evidence);
    }
    for (int label : cert.label_audit) d.labels.push_back(g.vertex_name(label));
    if (cert.amalgam_evidence) {
        const AmalgamEvidence& ev = *cert.amalgam_evidence;
        AmalgamDoc a;
        a.joint = g.vertex_name(ev.joint);
        for (int v : ev.first_part) a.first_part.push_back(g.vertex_name(v));

        std::vector<int> second_vertices;
        std::vector<char> in_first(g.vertex_count(), 0);
        for (int v : ev.first_part) in_first[v] = 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!in_first[v] || v == ev.joint) second_vertices.push_back(v);
        }
        LogGraph g1 = induced_subgraph(g, ev.first_part);
        LogGraph g2 = induced_subgraph(g, second_vertices);
        a.certificates.push_back(make_certificate_doc(g1, *ev.first));
        a.certificates.push_back(make_certificate_doc(g2, *ev.second));
        d.amalgam.push_back(std::move(a));
    }
    return d;
}

nlohmann::json to_json(const CertificateDoc& doc) { return certificate_to_json(doc); }

nlohmann::json to_json(const AnalysisDoc& doc) {
    json j;
    j["input"] = json{{"path", doc.path}, {"digest", doc.digest}, {"format", doc.format}};
    j["graph"] = graph_to_json(doc.graph);
    j["validation"] = validation_to_json(doc.validation);
    j["bounds"] = doc.bounds ? json{{"lower", doc.bounds->lower}, {"upper", doc.bounds->upper}}
                             : json(nullptr);
    j["greedy"] = doc.greedy ? complexity_to_json(*doc.greedy) : json(nullptr);
    j["exact"] = doc.exact ? complexity_to_json(*doc.exact) : json(nullptr);
    j["decomposition"] =
        doc.decomposition ? decomposition_to_json(*doc.decomposition) : json(nullptr);
    j["certificate"] = doc.certificate ? certificate_to_json(*doc.certificate) : json(nullptr);
    j["timing_ms"] = doc.timing_ms;
    return j;
}

CertificateDoc certificate_from_json(const nlohmann::json& j) {
    return certificate_from_json_impl(j);
}

AnalysisDoc analysis_from_json(const nlohmann::json& j) {
    AnalysisDoc d;
    d.path = j.at("input").at("path").get<std::string>();
    d.digest = j.at("input").at("digest").get<std::string>();
    d.format = j.at("input").at("format").get<std::string>();
    d.graph = graph_from_json(j.at("graph"));
    d.validation = validation_from_json(j.at("validation"));
    if (!j.at("bounds").is_null()) {
        d.bounds = BoundsDoc{j.at("bounds").at("lower").get<int>(),
                             j.at("bounds").at("upper").get<int>()};
    }
    if (!j.at("greedy").is_null()) d.greedy = complexity_from_json(j.at("greedy"));
    if (!j.at("exact").is_null()) d.exact = complexity_from_json(j.at("exact"));
    if (!j.at("decomposition").is_null()) {
        d.decomposition = decomposition_from_json(j.at("decomposition"));
    }
    if (!j.at("certificate").is_null()) {
        d.certificate = certificate_from_json_impl(j.at("certificate"));
    }
    d.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
    return d;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

}  // namespace lotkit
