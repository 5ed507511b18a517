#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + CHARFORM_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::fgets(buf.data(), buf.size(), pipe)) res.out += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("hmatrix emits the frozen matrix") {
    const auto res = run("hmatrix --n 4");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["n"] == 4);
    CHECK(j["prefactor"] == "12");
    CHECK(j["matrix"] == json::parse("[[20,14,6],[14,11,5],[6,5,3]]"));
}

TEST_CASE("discriminant on the worked cubic") {
    const auto res = run("discriminant --coeffs 0,3,4,1");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["n"] == 3);
    CHECK(j["D"] == "28");
    CHECK(j["normalized"] == "14");
    CHECK(j["prefactor"] == "2");
    CHECK(j["sign"] == "positive");
    CHECK(j["perfect_square"] == false);
    CHECK(j["candidates"] == "non-square");
}

TEST_CASE("discriminant candidates on a square case") {
    const auto res = run("discriminant --coeffs 2,-3,1");
    const auto j = json::parse(res.out);
    CHECK(j["D"] == "1");
    CHECK(j["candidates"] == json::parse(R"(["2","1"])"));
}

TEST_CASE("roots reports solutions and the sign-convention tuple") {
    const auto res = run("roots --coeffs 0,3,4,1");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["converged"] == true);
    CHECK(j["roots"] == json::parse("[[-3.0,0.0],[-1.0,0.0],[0.0,0.0]]"));
    CHECK(j["tuple"] == json::parse("[[0.0,0.0],[1.0,0.0],[3.0,0.0]]"));
}

TEST_CASE("transform round-trips through the difference view") {
    const auto fwd = run("transform --roots 0,1,3");
    CHECK(fwd.exit_code == 0);
    const auto j = json::parse(fwd.out);
    CHECK(j["reference"] == "0");
    CHECK(j["b"] == json::parse(R"(["1","1"])"));
    CHECK(j["reference_check_pass"] == true);

    const auto back = run("transform --reference 0 --b 1,1");
    const auto k = json::parse(back.out);
    CHECK(k["roots"] == json::parse(R"(["0","1","3"])"));
    CHECK(k["leading"] == "1");
}

TEST_CASE("verify runs the battery and reports a summary") {
    const auto res = run("verify --coeffs 0,3,4,1 --roots 0,1,3");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["summary"]["total"] == 5);
    CHECK(j["summary"]["failed"] == 0);
    for (const auto& r : j["records"]) CHECK(r["pass"] == true);

    // subset selection
    const auto sub = run("verify --coeffs 0,3,4,1 --roots 0,1,3 --checks eq2,eq11");
    const auto k = json::parse(sub.out);
    CHECK(k["summary"]["total"] == 2);
}

TEST_CASE("verify solves for roots when none are given") {
    const auto res = run("verify --coeffs -6,11,-6,1");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["summary"]["total"] == 5);
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("verify rejects roots that do not expand to the coefficients") {
    const auto res = run("verify --coeffs 0,3,4,1 --roots 0,1,2");
    CHECK(res.exit_code == 2);
}

TEST_CASE("permute reports family identities and pair ratios") {
    const auto res = run("permute --roots 0,1,3");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["sets"] == 6);
    CHECK(j["D"] == "28");
    CHECK(j["organized"] == false);
    CHECK(j["sums"] == json::parse(R"(["0","0"])"));
    REQUIRE(j["pairs"].size() == 1);
    CHECK(j["pairs"][0]["kind"] == "lead_pair");
    CHECK(j["pairs"][0]["sum"] == "-42");
    CHECK(j["pairs"][0]["target"] == "-42");
    CHECK(j["pairs"][0]["ratio"] == 1.0);
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("fuzz is reproducible byte for byte") {
    const auto a = run("--seed 42 fuzz --trials 6");
    const auto b = run("--seed 42 fuzz --trials 6");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run("--seed 43 fuzz --trials 6");
    CHECK(a.out != c.out);
}

TEST_CASE("permutation cap: flag beats environment beats default") {
    CHECK(run("permute --roots 1,2,1,2,1,2,1,2,1").exit_code == 2);          // default cap 8
    CHECK(run("permute --roots 1,2,1,2,1", "CHARFORM_CAP=4").exit_code == 2);  // env lowers it
    CHECK(run("--cap 5 permute --roots 1,2,1,2,1", "CHARFORM_CAP=4").exit_code == 0);
}

TEST_CASE("output formats") {
    const auto csv = run("--format csv verify --coeffs 0,3,4,1 --roots 0,1,3");
    CHECK(csv.out.find("check,degree,digest,pass,lhs,rhs,delta") == 0);
    const auto pretty = run("--format pretty verify --coeffs 0,3,4,1 --roots 0,1,3");
    CHECK(pretty.out.find("PASS") != std::string::npos);
    CHECK(pretty.out.find("5/5 checks passed") != std::string::npos);
    CHECK(run("--format yaml hmatrix --n 3").exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("discriminant").exit_code == 2);                    // missing --coeffs
    CHECK(run("discriminant --coeffs 1,2").exit_code == 2);       // degree too small
    CHECK(run("discriminant --coeffs 1,2,0").exit_code == 2);     // zero leading coefficient
    CHECK(run("discriminant --coeffs 1,2,x").exit_code == 2);     // malformed entry
    CHECK(run("verify --coeffs 2,-3,1 --checks eq99").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("identity failures exit with 1 and parse failures beat them") {
    // all identities hold for valid inputs, so exit 1 is not reachable
    // through honest data; the closest observable contract is that a
    // passing run exits 0 and the summary matches the records
    const auto res = run("--seed 11 fuzz --trials 3");
    CHECK(res.exit_code == 0);
    const auto j = json::parse(res.out);
    CHECK(j["summary"]["failed"] == 0);
}
