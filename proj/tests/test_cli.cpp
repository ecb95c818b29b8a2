#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& cacheDir = "") {
    std::string cmd;
    if (!cacheDir.empty()) cmd += "NILSLICE_CACHE_DIR='" + cacheDir + "' ";
    cmd += std::string(NILSLICE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path temp_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("nilslice-test-" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("classify: text, json and exit codes") {
    RunResult good = run("classify --algebra so --dim 7 --partition 3,3,1");
    CHECK(good.code == 0);
    CHECK(good.out.find("verdict:") != std::string::npos);
    CHECK(good.out.find("good") != std::string::npos);

    RunResult js = run("classify --algebra so --dim 5 --partition 2,2,1 --json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"defect_report\"") != std::string::npos);
    CHECK(js.out.find("\"good\": true") != std::string::npos);

    RunResult symp = run("classify --algebra sp --dim 6 --partition 4,2 --json");
    CHECK(symp.code == 0);
    CHECK(symp.out.find("\"good\": true") != std::string::npos);
    CHECK(symp.out.find("\"defect_report\": null") != std::string::npos);

    CHECK(run("classify --algebra so --dim 5 --partition 2,1,1").code == 2);
    CHECK(run("classify --algebra so --dim 5 --partition 2,2,x").code == 2);
    CHECK(run("classify --algebra sq --dim 5 --partition 2,2,1").code == 2);
    CHECK(run("classify --algebra so --dim 5").code == 2);  // missing option
}

TEST_CASE("table: header, content and frozen rank-4 csv") {
    RunResult small = run("table --algebra so --max-rank 2");
    CHECK(small.code == 0);
    CHECK(small.out.rfind("rank,type,partition,n_lambda,s_lambda,d_lambda,defect,"
                          "verdict,provenance\n", 0) == 0);
    CHECK(small.out.find("2,B,2+2+1") != std::string::npos);

    const fs::path dir = temp_dir("table");
    const fs::path csv = dir / "r4.csv";
    RunResult r4 = run("table --algebra so --max-rank 4 --out " + csv.string());
    CHECK(r4.code == 0);
    const std::string got = read_file(csv);
    const std::string want =
        read_file(fs::path(NILSLICE_GOLDEN_DIR) / "table_rank4.csv");
    REQUIRE_MESSAGE(!want.empty(), "golden csv missing");
    CHECK(got == want);
}

TEST_CASE("slice: caching replays byte-identical output") {
    const fs::path cache = temp_dir("cache");
    const std::string args = "slice --algebra so --dim 5 --partition 2,2,1";
    RunResult first = run(args, cache.string());
    CHECK(first.code == 0);
    CHECK(first.out.find("\"mode\": \"evaluation\"") != std::string::npos);
    int files = 0;
    for (const auto& e : fs::directory_iterator(cache)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);
    RunResult second = run(args, cache.string());
    CHECK(second.code == 0);
    CHECK(second.out == first.out);
    // a different seed is a different cache key
    RunResult other = run(args + " --seed 7", cache.string());
    CHECK(other.code == 0);
    files = 0;
    for (const auto& e : fs::directory_iterator(cache)) ++files, (void)e;
    CHECK(files == 2);
}

TEST_CASE("slice: symbolic mode and relation checking") {
    const fs::path cache = temp_dir("cache-sym");
    RunResult rep = run(
        "slice --algebra so --dim 10 --partition 3,3,2,2 --identical "
        "--verify-relations --degrees --jacobian",
        cache.string());
    CHECK(rep.code == 0);
    CHECK(rep.out.find("\"mode\": \"symbolic\"") != std::string::npos);
    CHECK(rep.out.find("\"initial\"") != std::string::npos);
    CHECK(rep.out.find(": holds") != std::string::npos);
}

TEST_CASE("slice: dimension guard") {
    CHECK(run("slice --algebra so --dim 16 --partition 6,6,3,1").code == 2);
}

TEST_CASE("verify and fixtures subcommands") {
    RunResult fx = run("fixtures --check exceptional");
    CHECK(fx.code == 0);
    CHECK(fx.out.find("0 discrepancies") != std::string::npos);
    CHECK(run("fixtures --check bogus").code == 2);

    RunResult ex = run("verify --example e5_21");
    CHECK(ex.code == 0);
    CHECK(ex.out.find("verified") != std::string::npos);
    CHECK(run("verify --example nope").code == 2);
}
