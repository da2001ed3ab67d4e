#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(PEDTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("pedtool-test-" + std::to_string(::getpid()) + "-" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    static std::string read(const std::string& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

const char* kTwoEdge = "ped-graph 1\n4 2\n0 0\n4 0\n1 -1\n1 3\n0 1\n2 3\n";

}  // namespace

TEST_F(Cli, GenerateAndValidateKnn) {
    ASSERT_EQ(run("generate knn -n 8 --delta 1/4 -o " + path("g.txt") + " --stubs " + path("s.txt")).code, 0);
    Result v = run("validate " + path("g.txt") + " " + path("s.txt"));
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "valid\n");
    EXPECT_EQ(run("maxdelta " + path("g.txt")).code, 0);
}

TEST_F(Cli, OverCapacityIsAnInputError) {
    EXPECT_EQ(run("generate knn -n 9 --delta 1/4 -o " + path("g.txt")).code, 2);
}

TEST_F(Cli, InvalidStubsExitOne) {
    std::string g = write("g.txt", kTwoEdge);
    std::string ok = write("ok.txt", "ped-stubs 1\n0 1/4\n1 1/4\n");
    std::string bad = write("bad.txt", "ped-stubs 1\n0 1/2\n1 1/2\n");
    EXPECT_EQ(run("validate " + g + " " + ok).code, 0);
    Result r = run("validate " + g + " " + bad);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("invalid 1"), std::string::npos);
    EXPECT_EQ(run("validate " + g + " " + bad + " --float").code, 1);
}

TEST_F(Cli, MalformedInputExitsTwo) {
    std::string g = write("g.txt", "ped-graph 1\n2 1\n0 0\n");
    EXPECT_EQ(run("crossings " + g).code, 2);
    EXPECT_EQ(run("crossings " + path("missing.txt")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("generate knn -n 4 --delta 2/0").code, 2);
}

TEST_F(Cli, NotTwoPlanarExitsTwo) {
    std::string g =
        write("g.txt", "ped-graph 1\n8 4\n0 0\n10 0\n1 -1\n1 1\n3 -1\n3 1\n5 -1\n5 1\n0 1\n2 3\n4 5\n6 7\n");
    EXPECT_EQ(run("maxsped " + g).code, 2);
    EXPECT_EQ(run("crossings " + g).code, 0);
}

TEST_F(Cli, MaxSpedAndMinSped) {
    std::string g = write("g.txt", kTwoEdge);
    Result m = run("maxsped " + g + " --exact -o " + path("s.txt"));
    ASSERT_EQ(m.code, 0);
    EXPECT_NE(m.out.find("ink 6\n"), std::string::npos);
    EXPECT_NE(m.out.find("ink_exact 6\n"), std::string::npos);
    EXPECT_EQ(run("validate " + g + " " + path("s.txt")).code, 0);

    Result z = run("maxsped " + g + " --zero-one");
    EXPECT_NE(z.out.find("ink 4\n"), std::string::npos);

    Result n = run("minsped " + g + " --exact-oracle -o " + path("m.txt"));
    ASSERT_EQ(n.code, 0);
    EXPECT_NE(n.out.find("variables 2\n"), std::string::npos);
    EXPECT_NE(n.out.find("erased_weight 2 bound_check ok"), std::string::npos);
    EXPECT_EQ(run("validate " + g + " " + path("m.txt")).code, 0);
    EXPECT_NE(run("minsped " + g + " --relative").out.find("erased_weight 1/4"), std::string::npos);
}

TEST_F(Cli, Bounds) {
    Result b = run("bounds");
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("bound 240"), std::string::npos);
    EXPECT_NE(run("bounds --json").out.find("\"upper_bound\": 240"), std::string::npos);
}

TEST_F(Cli, RandomIsDeterministic) {
    Result a = run("generate random --edges 30 --seed 42");
    Result b = run("generate random --edges 30 --seed 42");
    Result c = run("generate random --edges 30 --seed 43");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    std::string g = write("g.txt", a.out);
    EXPECT_EQ(run("maxsped " + g).out, run("maxsped " + g + " --sweep").out);
}

TEST_F(Cli, RenderSvg) {
    ASSERT_EQ(run("generate knn -n 3 --delta 1/4 -o " + path("g.txt") + " --stubs " + path("s.txt")).code, 0);
    ASSERT_EQ(run("render " + path("g.txt") + " --stubs " + path("s.txt") + " -o " + path("k.svg")).code, 0);
    std::string svg = read(path("k.svg"));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_EQ(svg, run("render " + path("g.txt") + " --stubs " + path("s.txt")).out);
}
