#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lotkit/certify.hpp"
#include "lotkit/complexity.hpp"
#include "lotkit/decomposition.hpp"
#include "lotkit/gen.hpp"
#include "lotkit/json_io.hpp"
#include "lotkit/presentation.hpp"
#include "lotkit/reachability.hpp"
#include "lotkit/verify.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lotkit::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lotkit::Error("cannot write '" + path.string() + "'");
    out << content;
}

int census_cap() {
    if (const char* env = std::getenv("LOTKIT_MAX_M")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return lotkit::kDefaultCensusCap;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string method_label(lotkit::Method m) {
    switch (m) {
        case lotkit::Method::exact: return "exact";
        case lotkit::Method::greedy: return "greedy";
        case lotkit::Method::trivial_bound: return "trivial-bound";
    }
    return "?";
}

std::string witness_names(const lotkit::LogGraph& g, const std::vector<int>& witness) {
    std::string out = "{";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ", ";
        out += g.vertex_name(witness[i]);
    }
    return out + "}";
}

void print_text_report(const lotkit::AnalysisDoc& doc, const lotkit::LogGraph& g,
                       const std::optional<lotkit::ComplexityReport>& greedy,
                       const std::optional<lotkit::ComplexityReport>& exact) {
    std::cout << "input: " << doc.path << " (" << doc.format << ", digest " << doc.digest
              << ")\n";
    std::cout << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << '\n';
    std::cout << "flags: connected=" << doc.validation.connected
              << " tree=" << doc.validation.tree
              << " interior_reduced=" << doc.validation.interior_reduced
              << " injective=" << doc.validation.injective << '\n';
    if (doc.bounds) {
        std::cout << "bounds: cp in [" << doc.bounds->lower << ", " << doc.bounds->upper << "]\n";
    }
    if (greedy) {
        std::cout << "greedy: |S| = " << greedy->value << ", witness "
                  << witness_names(g, greedy->witness) << '\n';
    }
    if (exact) {
        std::cout << "exact: cp = " << exact->value << ", witness "
                  << witness_names(g, exact->witness) << " (" << exact->subsets_examined
                  << " subsets examined, " << method_label(exact->method) << ")\n";
    }
    if (doc.decomposition) {
        std::cout << "decomposition: " << doc.decomposition->s << " part(s)\n";
    } else {
        std::cout << "decomposition: none\n";
    }
    if (doc.certificate) {
        std::cout << "certificate: " << doc.certificate->reason << '\n';
    } else {
        std::cout << "certificate: none found\n";
    }
}

int cmd_analyze(const std::string& path, bool exact_flag, bool json_flag,
                const std::string& dot_out) {
    std::string text;
    lotkit::LogGraph g = [&] {
        text = read_file(path);
        std::size_t first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '<') {
            return lotkit::presentation_to_log(lotkit::parse_presentation(text));
        }
        return lotkit::parse_lot_file(text);
    }();

    lotkit::AnalysisDoc doc;
    doc.path = path;
    doc.digest = "fnv1a64:" + lotkit::fnv1a64_hex(text);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    doc.format = (first != std::string::npos && text[first] == '<') ? "presentation" : "lot";
    doc.graph = lotkit::make_graph_doc(g);

    lotkit::ValidationReport rep = lotkit::validate(g);
    doc.validation = lotkit::make_validation_doc(rep);

    if (!rep.connected) {
        if (json_flag) {
            std::cout << lotkit::to_json(doc).dump(2) << '\n';
        } else {
            std::cerr << "validation failed: graph is not connected\n";
        }
        return 2;
    }

    std::optional<lotkit::ComplexityReport> greedy;
    std::optional<lotkit::ComplexityReport> exact;

    auto t0 = Clock::now();
    if (rep.interior_reduced) {
        greedy = lotkit::greedy_seed(g);
        doc.greedy = lotkit::make_complexity_doc(g, *greedy);
    }
    doc.timing_ms["greedy"] = ms_since(t0);

    t0 = Clock::now();
    auto bounds = lotkit::complexity_bounds(g, greedy ? std::optional<int>(greedy->value)
                                                      : std::nullopt);
    doc.bounds = lotkit::BoundsDoc{bounds.lower, bounds.upper};
    doc.timing_ms["bounds"] = ms_since(t0);

    if (exact_flag) {
        t0 = Clock::now();
        exact = lotkit::exact_complexity(g);
        doc.exact = lotkit::make_complexity_doc(g, *exact);
        doc.timing_ms["exact"] = ms_since(t0);
    }

    if (rep.tree && rep.interior_reduced) {
        t0 = Clock::now();
        if (auto dec = lotkit::decompose(g)) {
            doc.decomposition = lotkit::make_decomposition_doc(g, *dec);
        }
        doc.timing_ms["decompose"] = ms_since(t0);

        t0 = Clock::now();
        auto effort = exact_flag ? lotkit::Effort::exhaustive : lotkit::Effort::cheap;
        if (auto cert = lotkit::certify_aspherical(g, effort)) {
            doc.certificate = lotkit::make_certificate_doc(g, *cert);
        }
        doc.timing_ms["certify"] = ms_since(t0);
    }

    if (!dot_out.empty()) {
        const std::vector<int>& highlight =
            exact ? exact->witness : (greedy ? greedy->witness : std::vector<int>{});
        write_file(dot_out, lotkit::export_dot(g, highlight));
    }

    if (json_flag) {
        std::cout << lotkit::to_json(doc).dump(2) << '\n';
    } else {
        print_text_report(doc, g, greedy, exact);
    }
    return 0;
}

int cmd_generate(const lotkit::GenSpec& spec, const std::string& out_dir, bool force) {
    fs::path dir(out_dir);
    fs::create_directories(dir);

    switch (spec.mode) {
        case lotkit::GenSpec::Mode::rosebrock_chain: {
            lotkit::LogGraph g = lotkit::rosebrock_chain(spec.parts, spec.attachment,
                                                         spec.rng_seed);
            fs::path file = dir / ("chain_s" + std::to_string(spec.parts) + "_m" +
                                   std::to_string(g.vertex_count()) + ".lot");
            write_file(file, lotkit::serialize_lot(g));
            std::cout << file.string() << '\n';
            return 0;
        }
        case lotkit::GenSpec::Mode::random: {
            lotkit::LogGraph g = lotkit::random_lot(spec.m, spec.rng_seed);
            fs::path file = dir / ("random_m" + std::to_string(spec.m) + "_seed" +
                                   std::to_string(spec.rng_seed) + ".lot");
            write_file(file, lotkit::serialize_lot(g));
            std::cout << file.string() << '\n';
            return 0;
        }
        case lotkit::GenSpec::Mode::exhaustive: {
            int cap = force ? std::max(spec.m, census_cap()) : census_cap();
            lotkit::LotEnumerator census(spec.m, cap);
            fs::path sub = dir / ("census_m" + std::to_string(spec.m));
            fs::create_directories(sub);
            std::uint64_t count = 0;
            while (auto g = census.next()) {
                char name[32];
                std::snprintf(name, sizeof name, "lot_%06llu.lot",
                              static_cast<unsigned long long>(count));
                write_file(sub / name, lotkit::serialize_lot(*g));
                ++count;
            }
            nlohmann::json manifest{{"m", spec.m},
                                    {"count", count},
                                    {"expected", lotkit::LotEnumerator::count_for(spec.m)}};
            write_file(sub / "manifest.json", manifest.dump(2) + "\n");
            std::cout << sub.string() << ": " << count << " graphs\n";
            return 0;
        }
    }
    return 1;
}

int cmd_verify(int max_m, int samples, std::uint64_t seed, const std::string& dump_dir,
               bool inject_fault) {
    lotkit::VerifyOptions opts;
    opts.max_m = std::min(max_m, census_cap());
    opts.samples = samples;
    opts.seed = seed;
    opts.dump_dir = dump_dir;
    opts.inject_fault = inject_fault;

    lotkit::VerifySummary summary = lotkit::run_verification(opts);
    for (const auto& [m, count] : summary.census_counts) {
        std::cout << "census m=" << m << ": " << count << " graphs\n";
    }
    for (const auto& [m, count] : summary.sample_counts) {
        std::cout << "samples m=" << m << ": " << count << " graphs\n";
    }
    if (summary.even_full_cover > 0) {
        std::cout << "note: " << summary.even_full_cover
                  << " even-m graphs had every edge covered\n";
    }
    std::cout << "checked " << summary.graphs_checked << " graphs, " << summary.checks_run
              << " checks, " << summary.violations.size() << " violations\n";
    for (std::size_t i = 0; i < summary.violations.size(); ++i) {
        std::cerr << "violation: " << summary.violations[i] << " (fixture "
                  << summary.fixture_paths[i] << ")\n";
    }
    return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"labeled oriented graph analysis toolkit"};
    app.require_subcommand(1);

    // analyze
    std::string path;
    bool exact_flag = false;
    bool json_flag = false;
    std::string dot_out;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a LOT or presentation file");
    analyze->add_option("path", path, "input file")->required();
    analyze->add_flag("--exact", exact_flag, "run the exact complexity search");
    analyze->add_flag("--json", json_flag, "emit a JSON document");
    analyze->add_option("--dot", dot_out, "write a DOT rendering to this path");

    // generate
    std::string mode = "random";
    int vertices = 6;
    int parts = 3;
    std::string attachment = "chain";
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    bool force = false;
    CLI::App* generate = app.add_subcommand("generate", "write fixture files");
    generate->add_option("--mode", mode, "chain, random, or census")->required();
    generate->add_option("--vertices", vertices, "vertex count (random/census)");
    generate->add_option("--parts", parts, "number of Rosebrock parts (chain)");
    generate->add_option("--attachment", attachment, "chain, star, or random");
    generate->add_option("--seed", seed, "RNG seed");
    generate->add_option("--out", out_dir, "output directory")->required();
    generate->add_flag("--force", force, "lift the census size cap");

    // verify
    int max_m = 5;
    int samples = 10000;
    std::uint64_t vseed = 1;
    std::string dump_dir = ".";
    bool inject_fault = false;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant battery");
    verify->add_option("--max-m", max_m, "largest exhaustive census size");
    verify->add_option("--samples", samples, "random samples per m in {6,7}");
    verify->add_option("--seed", vseed, "RNG seed");
    verify->add_option("--dump-dir", dump_dir, "where violation fixtures are written");
    verify->add_flag("--inject-fault", inject_fault, "testing only: corrupt witnesses")
        ->group("");  // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(path, exact_flag, json_flag, dot_out);
        if (generate->parsed()) {
            lotkit::GenSpec spec;
            spec.m = vertices;
            spec.rng_seed = seed;
            spec.parts = parts;
            if (mode == "chain") {
                spec.mode = lotkit::GenSpec::Mode::rosebrock_chain;
            } else if (mode == "random") {
                spec.mode = lotkit::GenSpec::Mode::random;
            } else if (mode == "census") {
                spec.mode = lotkit::GenSpec::Mode::exhaustive;
            } else {
                std::cerr << "unknown mode '" << mode << "'\n";
                return 1;
            }
            if (attachment == "star") spec.attachment = lotkit::Attachment::star;
            if (attachment == "random") spec.attachment = lotkit::Attachment::random;
            return cmd_generate(spec, out_dir, force);
        }
        if (verify->parsed()) return cmd_verify(max_m, samples, vseed, dump_dir, inject_fault);
    } catch (const lotkit::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
