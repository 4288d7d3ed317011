#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lotkit/complexity.hpp"
#include "lotkit/decomposition.hpp"
#include "lotkit/graph.hpp"

namespace lotkit {

/// The sufficient conditions a certificate may cite. A certificate is a
/// claim of asphericity with re-checkable evidence; the absence of one
/// never claims the opposite.
enum class CertReason {
    complexity_two,
    maximal_complexity,
    injective_labeling,
    amalgam_of_aspherical,
};

enum class Effort { cheap, exhaustive };

struct AsphericityCertificate;

/// Split evidence: the tree separates at `joint` into two label-closed
/// sides (each side's edge labels stay on that side), and both sides carry
/// their own certificates.
struct AmalgamEvidence {
    int joint = -1;
    std::vector<int> first_part;  // ascending vertex indices of one side, joint included
    std::unique_ptr<AsphericityCertificate> first;
    std::unique_ptr<AsphericityCertificate> second;

    AmalgamEvidence();
    AmalgamEvidence(AmalgamEvidence&&) noexcept;
    AmalgamEvidence& operator=(AmalgamEvidence&&) noexcept;
    ~AmalgamEvidence();
};

struct AsphericityCertificate {
    CertReason reason = CertReason::injective_labeling;
    std::optional<ComplexityReport> complexity_evidence;   // complexity_two
    std::optional<Decomposition> decomposition_evidence;   // maximal_complexity
    std::vector<int> label_audit;                          // injective: per-edge labels, edge order
    std::optional<AmalgamEvidence> amalgam_evidence;       // amalgam_of_aspherical
};

/// Tries the sufficient conditions cheapest first: maximal complexity
/// (decompose), injective labeling (scan), then under exhaustive effort the
/// exact complexity-two search and finally recursive amalgam splitting at
/// cut vertices with label separation. Returns the first certificate found
/// or nullopt, which only means "no certificate found". Requires a
/// connected interior-reduced tree.
std::optional<AsphericityCertificate> certify_aspherical(const LogGraph& g, Effort effort);

/// Independent re-check of a certificate against its graph by replaying the
/// evidence (closure replay, decomposition replay, label audit, recursive
/// part verification). Returns false on any mismatch; never throws.
bool verify_certificate(const LogGraph& g, const AsphericityCertificate& cert);

}  // namespace lotkit
