#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
    int code;
    std::string out;
};

Result sba(const std::string& args) {
    std::string cmd = std::string("\"") + SBA_CLI_PATH + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::filesystem::path scratch() {
    auto d = std::filesystem::temp_directory_path() / ("sba_cli_test_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
}

std::string write_file(const std::string& name, const std::string& text) {
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, JacobiPassesOnCatalogAlgebra) {
    Result r = sba("check-jacobi 'catalog:(C3+A)'");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "# check-jacobi catalog:(C3+A) (seed 1)")) << r.out;
    EXPECT_TRUE(has(r.out, "PASS  super Jacobi identity")) << r.out;
    EXPECT_TRUE(has(r.out, "all checks passed")) << r.out;
}

// With [X3,X1] = X4 and [X4,X4] = i X1 the cyclic sum on (X4,X4,X4) picks up 3i.
TEST(Cli, JacobiFailureReportsWitness) {
    std::string f = write_file("bent.salg", "name = \"bent\"\ngrades = 0 0 1 1\nf 3 1 4 = 1\nf 1 4 4 = i\n");
    Result r = sba("check-jacobi " + f);
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "FAIL  super Jacobi identity")) << r.out;
    EXPECT_TRUE(has(r.out, "(m,i,j,k)=(3,4,4,4)")) << r.out;
    EXPECT_TRUE(has(r.out, "some checks failed")) << r.out;
}

TEST(Cli, InputErrorsExitTwo) {
    std::string bad = write_file("bad.salg", "name = \"x\"\ngrades = 0 0 1 1\nf 3 1 4 = 1 +\n");
    Result r = sba("check-jacobi " + bad);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(has(r.out, "bad.salg:3:")) << r.out;

    r = sba("check-jacobi " + (scratch() / "missing.salg").string());
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(has(r.out, "cannot open")) << r.out;

    EXPECT_EQ(sba("").code, 2);
    EXPECT_EQ(sba("frobnicate").code, 2);
    EXPECT_EQ(sba("hopf-verify prop9").code, 2);
    EXPECT_EQ(sba("check-jacobi 'catalog:(C3+A)' --param zz=1").code, 2);
    EXPECT_EQ(sba("hopf-verify prop4 --param k=1").code, 2);
    EXPECT_EQ(sba("check-jacobi catalog:NoSuchAlgebra").code, 2);
}

TEST(Cli, JsonLinesCarryTheSeed) {
    Result r = sba("check-jacobi 'catalog:(C3+A)' --json --seed 7");
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    nlohmann::json last;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        last = nlohmann::json::parse(line);
        EXPECT_EQ(last.at("seed"), 7) << line;
        ++lines;
    }
    EXPECT_GE(lines, 2);
    EXPECT_EQ(last.at("exit"), 0);
    EXPECT_TRUE(last.contains("summary"));
}

TEST(Cli, SeedIsEchoed) {
    Result r = sba("check-jacobi 'catalog:(C3+A)' --seed 7");
    EXPECT_TRUE(has(r.out, "(seed 7)")) << r.out;
}

TEST(Cli, SchoutenRowFourValue) {
    Result r = sba("schouten catalog-pair:row4 --param eps=1 --param k=2");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "[[r,r]] = 3/2 X2^X3^X3")) << r.out;
    r = sba("schouten catalog-pair:row4 --param eps=-1 --param k=4");
    EXPECT_TRUE(has(r.out, "[[r,r]] = 0")) << r.out;
}

TEST(Cli, SolveRFailsWhereNoRMatrixExists) {
    EXPECT_EQ(sba("solve-r 'catalog:C2_p=1(+)A11'").code, 1);
}

TEST(Cli, ClassifyDualAgainstItself) {
    Result r = sba("classify 'catalog:C2_p=1(+)A11' 'catalog:C2_p=1(+)A11'");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "equivalent")) << r.out;
}

TEST(Cli, HopfVerify) {
    EXPECT_EQ(sba("hopf-verify prop5 --order 3").code, 0);
    Result r = sba("hopf-verify prop5 --printed-antipode --order 3");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_TRUE(has(r.out, "FAIL")) << r.out;
}

TEST(Cli, PhaseVerify) {
    EXPECT_EQ(sba("phase-verify --order 3").code, 0);
    EXPECT_EQ(sba("phase-verify --deformed --order 3").code, 0);
    EXPECT_EQ(sba("phase-verify --deformed --literal-h --order 3").code, 1);
}
