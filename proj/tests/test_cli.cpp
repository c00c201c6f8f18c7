// End-to-end checks of the command-line binary. The binary path comes from
// the MIDNET_CLI_PATH environment variable (set by the test harness).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path() {
    const char* env = std::getenv("MIDNET_CLI_PATH");
    REQUIRE_MESSAGE(env != nullptr, "MIDNET_CLI_PATH must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& args) {
    const auto err_file = std::filesystem::temp_directory_path() /
                          ("midnet-cli-err-" + std::to_string(std::rand()) + ".txt");
    const std::string command = cli_path() + " " + args + " 2>" + err_file.string();
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char chunk[4096];
    size_t got;
    while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) result.out.append(chunk, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = slurp(err_file);
    std::filesystem::remove(err_file);
    return result;
}

struct TempEdges {
    std::filesystem::path path;
    explicit TempEdges(const std::string& content) {
        path = std::filesystem::temp_directory_path() /
               ("midnet-cli-" + std::to_string(std::rand()) + ".edges");
        std::ofstream(path) << content;
    }
    ~TempEdges() { std::filesystem::remove(path); }
};

const char* kFig1 = "1 2\n1 3\n2 4\n2 5\n3 5\n4 6\n5 6\n6 7\n";

}  // namespace

TEST_CASE("analyze table output") {
    TempEdges edges(kFig1);
    const RunResult r = run("analyze " + edges.path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("middlemen: 2*, 5*, 6**") != std::string::npos);
    CHECK(r.out.find("0.500") != std::string::npos);
    CHECK(r.out.find("nodes: 7") != std::string::npos);
}

TEST_CASE("analyze json output is well-formed") {
    TempEdges edges(kFig1);
    const RunResult r = run("analyze --format json " + edges.path.string());
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["middlemen"] == nlohmann::json({"2", "5", "6"}));
    CHECK(doc["robustness"].size() == 3);
}

TEST_CASE("contest reports a minimal set and direct contestors") {
    TempEdges edges(kFig1);
    const RunResult r = run("contest " + edges.path.string() + " 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("contested by {") != std::string::npos);
    CHECK(r.out.find("size 1") != std::string::npos);
    CHECK(r.out.find("directly contested by") != std::string::npos);

    const RunResult strong = run("contest " + edges.path.string() + " 6");
    CHECK(strong.exit_code == 0);
    CHECK(strong.out.find("uncontested") != std::string::npos);
}

TEST_CASE("robustness triple for a single node and for --all") {
    TempEdges edges(kFig1);
    const RunResult r = run("robustness " + edges.path.string() + " 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rho=2") != std::string::npos);
    CHECK(r.out.find("rho*=1") != std::string::npos);
    CHECK(r.out.find("psi=1") != std::string::npos);

    const RunResult all = run("robustness --all --format csv " + edges.path.string());
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("2,") != std::string::npos);
    // Header plus one row per middleman.
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 4);
}

TEST_CASE("usage errors exit 2 and write to stderr") {
    const RunResult nofile = run("analyze /nonexistent/input.edges");
    CHECK(nofile.exit_code == 2);
    CHECK(nofile.out.empty());
    CHECK_FALSE(nofile.err.empty());

    const RunResult badsub = run("frobnicate");
    CHECK(badsub.exit_code == 2);

    TempEdges edges(kFig1);
    const RunResult notmid = run("robustness " + edges.path.string() + " 1");
    CHECK(notmid.exit_code == 2);
    CHECK(notmid.err.find("middleman") != std::string::npos);

    const RunResult neither = run("robustness " + edges.path.string());
    CHECK(neither.exit_code == 2);
}

TEST_CASE("exhausted search budget exits 3 with bounds") {
    TempEdges star("1 C\n2 C\nC 3\nC 4\nC 5\n");
    const RunResult r = run("robustness --budget 3 " + star.path.string() + " C");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("best bounds") != std::string::npos);
}

TEST_CASE("help is available") {
    const RunResult r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
}
