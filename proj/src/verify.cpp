#include "lotkit/verify.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "lotkit/certify.hpp"
#include "lotkit/complexity.hpp"
#include "lotkit/decomposition.hpp"
#include "lotkit/gen.hpp"
#include "lotkit/presentation.hpp"
#include "lotkit/reachability.hpp"

namespace lotkit {

namespace {

struct Battery {
    const VerifyOptions& opts;
    VerifySummary& summary;
    std::mt19937_64 rng;

    void report_violation(const LogGraph& g, const std::string& what) {
        summary.violations.push_back(what);
        std::filesystem::path dir(opts.dump_dir);
        std::filesystem::create_directories(dir);
        std::filesystem::path file =
            dir / ("violation_" + std::to_string(summary.violations.size()) + ".lot");
        std::ofstream out(file);
        out << "# " << what << '\n' << serialize_lot(g);
        summary.fixture_paths.push_back(file.string());
    }

    bool check(const LogGraph& g, bool condition, const std::string& what) {
        ++summary.checks_run;
        if (!condition) report_violation(g, what);
        return condition;
    }

    // Completeness of a witness, with the optional fault injection that
    // exercises the violation path end to end.
    bool witness_complete(const LogGraph& g, std::vector<int> witness) {
        if (opts.inject_fault && !witness.empty()) witness.pop_back();
        return is_reachable_from(g, std::span<const int>(witness));
    }

    void run_graph(const LogGraph& g) {
        ++summary.graphs_checked;
        const int m = g.vertex_count();
        const int bound = max_seed_bound(m);

        ValidationReport rep = validate(g);
        check(g, rep.connected && rep.tree && rep.interior_reduced,
              "generated LOT fails validation flags");

        ComplexityReport greedy = greedy_seed(g);
        check(g, greedy.value <= bound, "greedy witness exceeds floor((m+1)/2)");
        check(g, static_cast<int>(greedy.witness.size()) == greedy.value,
              "greedy witness size disagrees with value");
        check(g, witness_complete(g, greedy.witness), "greedy witness does not reach all vertices");

        ComplexityReport exact = exact_complexity(g);
        ComplexityBounds bounds = complexity_bounds(g);
        check(g, exact.value <= greedy.value, "exact value above greedy value");
        check(g, exact.value >= bounds.lower, "exact value below the trivial lower bound");
        check(g, witness_complete(g, exact.witness), "exact witness does not reach all vertices");

        auto dec = decompose(g);
        const bool maximal = m % 2 == 1 && exact.value == (m + 1) / 2;
        check(g, dec.has_value() == maximal,
              "decomposability disagrees with cp == (m+1)/2");
        if (dec) {
            check(g, dec->part_count() == (m - 1) / 2, "decomposition has the wrong part count");
            check(g, same_log(recompose(g, *dec), g), "decomposition replay mismatch");
        }

        if (m % 2 == 1 && m >= 5 && !dec) {
            int uncovered = -1;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (!rosebrock_cover(g, e)) {
                    uncovered = e;
                    break;
                }
            }
            if (check(g, uncovered >= 0,
                      "odd non-decomposable LOT with every edge covered")) {
                ComplexityReport sub = submaximal_seed(g, uncovered);
                check(g, sub.value <= bound - 1,
                      "submaximal witness exceeds floor((m+1)/2) - 1");
                check(g, witness_complete(g, sub.witness),
                      "submaximal witness does not reach all vertices");
                check(g, exact.value < bound, "cp not below maximal on a non-decomposable LOT");
            }
        }

        if (m % 2 == 0) {
            bool all_covered = true;
            for (int e = 0; e < g.edge_count() && all_covered; ++e) {
                if (!rosebrock_cover(g, e)) all_covered = false;
            }
            if (all_covered) ++summary.even_full_cover;
        }

        auto cert = certify_aspherical(g, Effort::exhaustive);
        if (m <= 5) {
            check(g, cert.has_value(), "census graph without a certificate");
        }
        if (cert) {
            check(g, verify_certificate(g, *cert), "emitted certificate fails re-verification");
        }

        // No closure of a connected interior-reduced LOT sits at exactly
        // m-1 vertices.
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<int> seed;
            for (int v = 0; v < m; ++v) {
                if (rng() % 3 == 0) seed.push_back(v);
            }
            auto res = closure(g, std::span<const int>(seed));
            check(g, static_cast<int>(res.closure.size()) != m - 1,
                  "closure stopped at exactly m-1 vertices");
        }
    }
};

}  // namespace

VerifySummary run_verification(const VerifyOptions& opts) {
    VerifySummary summary;
    Battery battery{opts, summary, std::mt19937_64(opts.seed)};

    for (int m = 3; m <= opts.max_m; ++m) {
        LotEnumerator census(m, std::max(opts.max_m, kDefaultCensusCap));
        std::uint64_t count = 0;
        while (auto g = census.next()) {
            battery.run_graph(*g);
            ++count;
        }
        summary.census_counts[m] = count;
    }

    if (opts.samples > 0) {
        for (int m : {6, 7}) {
            for (int i = 0; i < opts.samples; ++i) {
                battery.run_graph(random_lot(m, opts.seed * 1000003ull + m * 101ull + i));
            }
            summary.sample_counts[m] = opts.samples;
        }
    }

    return summary;
}

}  // namespace lotkit
