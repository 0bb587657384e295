#include "ldeq/io.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(LDEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return testutil::data_path(name); }

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "ldeq-cli-test";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Cli, CheckStable) {
    auto r = cli("check " + data("sp4.profile") + " " + data("sp4.delegation"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "gurus: 1 4\nstable\n");
}

TEST(Cli, CheckUnstable) {
    auto r = cli("check " + data("cyclic3.profile") + " " + data("all_vote3.delegation"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("unstable: voter 1 prefers guru 2"), std::string::npos);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(cli("check " + data("missing.profile") + " " + data("sp4.delegation")).code, 2);
    EXPECT_EQ(cli("check " + data("sp4.profile") + " " + data("all_vote3.delegation")).code, 2);
    EXPECT_EQ(cli("solve " + data("sp4.profile") + " --problem nope").code, 2);
    EXPECT_EQ(cli("solve " + data("cyclic3.profile") + " --class sp").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, SolveJson) {
    auto r = cli("solve " + data("sp4.profile") + " --problem minabst");
    ASSERT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["class"], "sp");
    EXPECT_EQ(doc["value"], 0);
    EXPECT_EQ(doc["gurus"], nlohmann::json::array({1, 4}));
}

TEST(Cli, SolveNegative) {
    auto r = cli("solve " + data("cyclic3.profile"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "negative");
}

TEST(Cli, SolveSizeGuard) {
    auto profile = scratch("sym30.profile");
    ASSERT_EQ(cli("gen --kind sym-random --n 30 --abstain-prob 0 --out " + profile.string()).code, 0);
    EXPECT_EQ(cli("solve " + profile.string() + " --problem mindis").code, 3);
    EXPECT_EQ(cli("solve " + profile.string() + " --problem eq").code, 0);
}

TEST(Cli, SolveWritesDelegationAndDot) {
    auto deleg = scratch("sp4.delegation");
    auto dot = scratch("sp4.dot");
    auto r = cli("solve " + data("sp4.profile") + " --delegation-out " + deleg.string() + " --aux-dot " +
                 dot.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(testutil::read_file(deleg.string()), "1: 1\n2: 4\n3: 1\n4: 4\n");
    EXPECT_NE(testutil::read_file(dot.string()).find("1 -> 4"), std::string::npos);
    EXPECT_EQ(cli("check " + data("sp4.profile") + " " + deleg.string()).code, 0);
}

TEST(Cli, SolveWithModel) {
    auto profile = scratch("grid5.profile");
    ASSERT_EQ(cli("gen --kind db-points --points " + data("grid5.points") + " --out " + profile.string()).code, 0);
    auto r = cli("solve " + profile.string() + " --class db --model " + data("grid5.points"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["gurus"], nlohmann::json::array({4, 5}));
}

TEST(Cli, DynamicsReplayCycle) {
    auto r = cli("dynamics " + data("square4.profile") + " --rule ird-script --script " + data("square4.script"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, testutil::read_data("square4.trace"));
}

TEST(Cli, DynamicsTraceFile) {
    auto trace = scratch("worst.trace");
    auto r = cli("dynamics " + data("worst_case3.profile") + " --token seq:1,2,3,2,3,1,1,3,2 --trace-out " +
                 trace.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "# verdict converged last-change=9 round=3\n");
}

TEST(Cli, DynamicsBudget) {
    auto r = cli("dynamics " + data("cyclic3.profile") + " --budget 2");
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.out.find("budget-exhausted"), std::string::npos);
}

TEST(Cli, DynamicsBadScript) {
    auto script = scratch("bad.script");
    {
        std::ofstream(script) << "1,1,3\n";
    }
    EXPECT_EQ(cli("dynamics " + data("square4.profile") + " --rule ird-script --script " + script.string()).code, 2);
}

TEST(Cli, Enumerate) {
    EXPECT_EQ(cli("enumerate " + data("sp4.profile")).out, "# 1 kernel(s)\n{1,4}\n");
    EXPECT_EQ(cli("enumerate " + data("cyclic3.profile")).out, "# 0 kernel(s)\n");
}

TEST(Cli, GenIsDeterministic) {
    auto a = cli("gen --kind sp-random --n 12 --seed 5");
    auto b = cli("gen --kind sp-random --n 12 --seed 5");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto doc = ldeq::parse_profile(a.out);
    EXPECT_EQ(doc.profile.size(), 12);
    EXPECT_EQ(doc.classes, (std::vector<ldeq::ProfileClass>{ldeq::ProfileClass::kSinglePeaked}));
}

TEST(Cli, GenGadgetHasRoles) {
    auto r = cli("gen --kind gadget:memb --cnf " + data("five_var.cnf"));
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# role 15 vq"), std::string::npos);
    EXPECT_EQ(ldeq::parse_profile(r.out).profile.size(), 15);
}

TEST(Cli, Reduce) {
    auto r = cli("reduce " + data("five_var.cnf") + " --kind memb");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("satisfiable: yes"), std::string::npos);
    EXPECT_NE(r.out.find("agree"), std::string::npos);
    EXPECT_EQ(cli("reduce " + data("five_var.cnf") + " --kind mindis").code, 3);
}
