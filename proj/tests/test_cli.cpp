#include "hypercert/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = hypercert::cli::dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("hypercert_test_" + name);
}

constexpr const char *kSaalA1 = "sym m:int, a, b; upper: -m, a, b; lower: a-1, 1-m+b+1; arg: 1; bind: m=3";

} // namespace

TEST_CASE("eval and balanced") {
    auto r = run({"eval", "--spec", "sym; upper: -2, 1; lower: 1; arg: 1"});
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
    r = run({"eval", "--spec", "sym m:int, a, b, c; upper: -m, a, b; lower: c, 1-m+a+b-c; arg: 1",
             "--bind", "m=1, a=2, b=3, c=4"});
    CHECK(r.out == "-1/2\n");
    r = run({"balanced", "--spec", "sym m:int, a, b, c; upper: -m, a, b; lower: c, 1-m+a+b-c; arg: 1"});
    CHECK(r.out == "true\n");
    r = run({"balanced", "--spec", "sym; upper: -2, 1; lower: 1; arg: 1"});
    CHECK(r.out == "false\n");
}

TEST_CASE("errors are single machine-readable lines") {
    auto r = run({"eval", "--spec", "sym a; upper: a+; lower: a; arg: 1"});
    CHECK(r.status == 2);
    CHECK(r.err.rfind("error: ParseError:", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    CHECK(run({"eval", "--spec", "sym a; upper: -1, a; lower: ; arg: 1"}).status == 2); // unbound a
    CHECK(run({"eval", "--spec", "sym a; upper: -2; lower: -1; arg: 1"}).status == 1); // pole
    CHECK(run({"nonsense"}).status == 2);
    CHECK(run({"andrews"}).status == 2);
    CHECK(run({"saalschutz", "--m", "x"}).status == 2);
    CHECK(run({"eval", "--spec", "sym m:int; upper: -m; lower: ; arg: 1", "--bind", "m=1/2"}).status == 2);
}

TEST_CASE("saalschutz and andrews commands") {
    auto r = run({"saalschutz", "--a", "2", "--b", "3", "--c", "4", "--m", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "lhs=-1/2 rhs=-1/2 equal\n");
    r = run({"andrews", "--m", "1", "--x", "1/5", "--z", "1/7"});
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
    r = run({"saalschutz", "--a", "1/2", "--b", "1/3", "--m", "1", "--symbolic"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("master=c^2 - 5/6*c + 1/6\n", 0) == 0);
    CHECK(run({"saalschutz", "--a", "1/2", "--b", "5/2", "--m", "1", "--symbolic"}).status == 2);
}

TEST_CASE("seeded randomized reports are reproducible") {
    const auto a = run({"saalschutz", "--m", "5", "--samples", "20", "--seed", "42"});
    const auto b = run({"saalschutz", "--m", "5", "--samples", "20", "--seed", "42"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("summary passed=20 failed=0") != std::string::npos);
    const auto c = run({"saalschutz", "--m", "5", "--samples", "20", "--seed", "43"});
    CHECK(c.out != a.out);

    const auto x = run({"andrews", "--m", "3", "--samples", "10", "--seed", "7"});
    const auto y = run({"andrews", "--m", "3", "--samples", "10", "--seed", "7"});
    CHECK(x.status == 0);
    CHECK(x.out == y.out);
    CHECK(x.out.find(" value=") != std::string::npos);
    CHECK(x.out.find("/1 ") == std::string::npos);
}

TEST_CASE("prove-vanish then check-cert, with tampering") {
    const auto path = tmp("saal.json");
    auto r = run({"prove-vanish", "--spec", kSaalA1, "--out", path.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out == "vanishes n=3 total_degree=2\n");

    r = run({"check-cert", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out == "accept\n");

    nlohmann::json j;
    std::ifstream(path) >> j;
    j["total_degree"] = 4;
    const auto bad = tmp("saal_bad.json");
    std::ofstream(bad) << j.dump();
    r = run({"check-cert", bad.string()});
    CHECK(r.status == 1);
    CHECK(r.out == "reject BadDegree\n");

    std::ofstream(bad) << "{not json";
    r = run({"check-cert", bad.string()});
    CHECK(r.status == 1);
    CHECK(r.out == "reject Malformed\n");

    r = run({"prove-vanish", "--spec",
             "sym m:int, a, b, c; upper: -m, a, b; lower: c, 1-m+a+b-c; arg: 1; bind: m=3"});
    CHECK(r.status == 1);
    CHECK(r.err.rfind("error: NoneExists:", 0) == 0);
}

TEST_CASE("andrews --prove writes a composite certificate that check-cert accepts") {
    const auto path = tmp("andrews2.json");
    auto r = run({"andrews", "--m", "2", "--prove", "--out", path.string()});
    REQUIRE(r.status == 0);
    CHECK(run({"check-cert", path.string()}).out == "accept\n");
}

TEST_CASE("binary exit statuses") {
    const std::string bin = HYPERCERT_CLI_PATH;
    auto status = [&](const std::string &args) {
        const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("andrews --m 1 --x 1/5 --z 1/7") == 0);
    CHECK(status("eval --spec 'sym a; upper: a+; lower: a; arg: 1'") == 2);
    const auto path = tmp("bin.json");
    CHECK(status("prove-vanish --spec '" + std::string(kSaalA1) + "' --out " + path.string()) == 0);
    nlohmann::json j;
    std::ifstream(path) >> j;
    j["pairing"][0]["d"] = 5;
    std::ofstream(path) << j.dump();
    CHECK(status("check-cert " + path.string()) == 1);
}
