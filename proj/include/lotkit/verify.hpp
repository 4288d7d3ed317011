#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lotkit/graph.hpp"

namespace lotkit {

struct VerifyOptions {
    int max_m = 5;           // run the exhaustive census for m = 3 .. max_m
    int samples = 10000;     // seeded random LOTs per sampled m (6 and 7)
    std::uint64_t seed = 1;
    std::string dump_dir = ".";  // violations dump a reproducing .lot file here
    bool inject_fault = false;   // harness self-test: corrupt witnesses before checking
};

struct VerifySummary {
    std::map<int, std::uint64_t> census_counts;  // m -> graphs checked
    std::map<int, std::uint64_t> sample_counts;
    std::uint64_t graphs_checked = 0;
    std::uint64_t checks_run = 0;
    std::uint64_t even_full_cover = 0;  // even-m graphs whose every edge is covered
    std::vector<std::string> violations;
    std::vector<std::string> fixture_paths;

    bool ok() const { return violations.empty(); }
};

/// Runs the whole invariant battery over censuses and seeded samples:
/// validation flags, the greedy and exact seed-size bounds, the
/// maximal-complexity/decomposability equivalence, decomposition replay,
/// the submaximal construction on uncovered edges, certificate
/// re-verification, and the no-fixpoint-of-size-(m-1) property. Every
/// violation is recorded and a minimal reproducing fixture is written to
/// dump_dir.
VerifySummary run_verification(const VerifyOptions& opts);

}  // namespace lotkit
