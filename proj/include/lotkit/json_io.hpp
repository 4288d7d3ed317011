#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lotkit/certify.hpp"
#include "lotkit/complexity.hpp"
#include "lotkit/decomposition.hpp"
#include "lotkit/graph.hpp"

namespace lotkit {

// Name-based document mirrors of the in-memory types. These define the
// stable JSON schema: every document converts to JSON and back without
// loss, independent of dense vertex indices.

struct GraphDoc {
    std::vector<std::string> vertices;
    std::vector<std::array<std::string, 3>> edges;  // [source, target, label]
};

struct ValidationDoc {
    bool connected = false;
    bool tree = false;
    bool interior_reduced = false;
    bool injective = false;
    std::vector<std::string> violations;
    std::vector<int> interior_violations;
};

struct BoundsDoc {
    int lower = 1;
    int upper = 1;
};

struct ComplexityDoc {
    std::string method;
    int value = 0;
    std::vector<std::string> witness;
    int lower_bound = 1;
    std::uint64_t subsets_examined = 0;
    std::string submax_case;  // empty unless produced by submaximal_seed
};

struct PartDoc {
    std::string a, b, c;
    int edge_ab = -1;
    int edge_bc = -1;
};

struct IdentificationDoc {
    int part = -1;
    std::string vertex;
};

struct DecompositionDoc {
    int s = 0;
    std::vector<PartDoc> parts;
    std::vector<IdentificationDoc> identifications;
};

struct AmalgamDoc;

struct CertificateDoc {
    std::string reason;
    std::optional<ComplexityDoc> complexity;
    std::optional<DecompositionDoc> decomposition;
    std::vector<std::string> labels;
    std::vector<AmalgamDoc> amalgam;  // zero or one entries
};

struct AmalgamDoc {
    std::string joint;
    std::vector<std::string> first_part;
    std::vector<CertificateDoc> certificates;  // exactly two
};

struct AnalysisDoc {
    std::string path;
    std::string digest;
    std::string format;  // "lot" or "presentation"
    GraphDoc graph;
    ValidationDoc validation;
    std::optional<BoundsDoc> bounds;
    std::optional<ComplexityDoc> greedy;
    std::optional<ComplexityDoc> exact;
    std::optional<DecompositionDoc> decomposition;
    std::optional<CertificateDoc> certificate;
    std::map<std::string, double> timing_ms;
};

GraphDoc make_graph_doc(const LogGraph& g);
ValidationDoc make_validation_doc(const ValidationReport& rep);
ComplexityDoc make_complexity_doc(const LogGraph& g, const ComplexityReport& rep);
DecompositionDoc make_decomposition_doc(const LogGraph& g, const Decomposition& d);
CertificateDoc make_certificate_doc(const LogGraph& g, const AsphericityCertificate& cert);

nlohmann::json to_json(const AnalysisDoc& doc);
nlohmann::json to_json(const CertificateDoc& doc);
AnalysisDoc analysis_from_json(const nlohmann::json& j);
CertificateDoc certificate_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit hex digest; stable across platforms and runs.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace lotkit
