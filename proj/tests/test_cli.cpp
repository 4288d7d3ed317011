#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "lotkit/presentation.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LOTKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path sandbox() {
    fs::path dir = fs::temp_directory_path() / "lotkit_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_fixture(const std::string& name, const std::string& content) {
    fs::path file = sandbox() / name;
    std::ofstream out(file);
    out << content;
    return file;
}

}  // namespace

TEST_CASE("analyze a lot file with the exact search") {
    auto file = write_fixture("doubled.lot", lotkit::serialize_lot(fixtures::doubled_label_lot()));
    auto res = run_cli("analyze " + file.string() + " --exact --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("exact").at("value") == 2);
    CHECK(j.at("exact").at("witness") == nlohmann::json::array({"a", "c"}));
    CHECK(j.at("certificate").at("reason") == "complexity_two");
    CHECK(j.at("bounds").at("lower") == 2);
    CHECK(j.at("decomposition").is_null());
}

TEST_CASE("analyze without --exact skips the search") {
    auto file = write_fixture("rb.lot", lotkit::serialize_lot(fixtures::rosebrock_lot()));
    auto res = run_cli("analyze " + file.string() + " --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("exact").is_null());
    CHECK(j.at("certificate").at("reason") == "maximal_complexity");
    CHECK(j.at("decomposition").at("s") == 1);
}

TEST_CASE("analyze accepts the presentation format") {
    auto file = write_fixture("doubled.pres",
                              "< a,b,c,d | c a c^-1 = d, c d c^-1 = b, a d a^-1 = c >\n");
    auto res = run_cli("analyze " + file.string() + " --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("input").at("format") == "presentation");
    CHECK(j.at("graph").at("vertices").size() == 4);
}

TEST_CASE("exit codes: parse failure and validation failure") {
    auto broken = write_fixture("broken.lot", "vertices: a b\nedge a q b\n");
    CHECK(run_cli("analyze " + broken.string()).exit_code == 1);

    auto disconnected = write_fixture("disc.lot", "vertices: a b c\nedge a b c\n");
    CHECK(run_cli("analyze " + disconnected.string()).exit_code == 2);

    CHECK(run_cli("analyze " + (sandbox() / "missing.lot").string()).exit_code == 1);
}

TEST_CASE("analyze output is deterministic apart from timings") {
    auto file = write_fixture("hub.lot", lotkit::serialize_lot(fixtures::hub_lot()));
    auto a = run_cli("analyze " + file.string() + " --exact --json");
    auto b = run_cli("analyze " + file.string() + " --exact --json");
    REQUIRE(a.exit_code == 0);
    auto ja = nlohmann::json::parse(a.output);
    auto jb = nlohmann::json::parse(b.output);
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja == jb);
}

TEST_CASE("dot output lands on disk") {
    auto file = write_fixture("rbb.lot", lotkit::serialize_lot(fixtures::rosebrock_lot()));
    fs::path dot = sandbox() / "rb.dot";
    auto res = run_cli("analyze " + file.string() + " --dot " + dot.string());
    REQUIRE(res.exit_code == 0);
    std::ifstream in(dot);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("digraph lot {") != std::string::npos);
    CHECK(text.find("peripheries=2") != std::string::npos);  // greedy witness highlighted
}

TEST_CASE("generate chain then analyze it") {
    fs::path dir = sandbox() / "gen";
    auto gen = run_cli("generate --mode chain --parts 3 --out " + dir.string());
    REQUIRE(gen.exit_code == 0);
    fs::path file = dir / "chain_s3_m7.lot";
    REQUIRE(fs::exists(file));
    auto res = run_cli("analyze " + file.string() + " --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j.at("certificate").at("reason") == "maximal_complexity");
    CHECK(j.at("decomposition").at("s") == 3);
}

TEST_CASE("generate census writes files and a manifest") {
    fs::path dir = sandbox() / "census";
    auto gen = run_cli("generate --mode census --vertices 3 --out " + dir.string());
    REQUIRE(gen.exit_code == 0);
    fs::path sub = dir / "census_m3";
    std::ifstream in(sub / "manifest.json");
    auto manifest = nlohmann::json::parse(in);
    CHECK(manifest.at("count") == 3);
    CHECK(fs::exists(sub / "lot_000000.lot"));
    CHECK(fs::exists(sub / "lot_000002.lot"));
}

TEST_CASE("generate random is deterministic per seed") {
    fs::path dir = sandbox() / "rand";
    auto r1 = run_cli("generate --mode random --vertices 6 --seed 42 --out " + dir.string());
    REQUIRE(r1.exit_code == 0);
    fs::path file = dir / "random_m6_seed42.lot";
    std::ifstream in(file);
    std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    run_cli("generate --mode random --vertices 6 --seed 42 --out " + dir.string());
    std::ifstream in2(file);
    std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(first == second);
    CHECK_FALSE(first.empty());
}

TEST_CASE("verify subcommand reports its counts") {
    auto res = run_cli("verify --max-m 3 --samples 0");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("census m=3: 3 graphs") != std::string::npos);
    CHECK(res.output.find("0 violations") != std::string::npos);
}

TEST_CASE("verify exits nonzero under fault injection") {
    fs::path dir = sandbox() / "faults";
    auto res = run_cli("verify --max-m 3 --samples 0 --inject-fault --dump-dir " + dir.string());
    CHECK(res.exit_code == 1);
    CHECK(fs::exists(dir));
    bool has_fixture = false;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".lot") has_fixture = true;
    }
    CHECK(has_fixture);
}
