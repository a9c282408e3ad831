#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "antimagic");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = antimagic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("antimagic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateAndApproxMagic) {
    ASSERT_EQ(run({"gen", "petersen", "-o", path("p.el")}).code, 0);
    const auto r = run({"label", "--mode", "approx-magic", path("p.el"), "-o", path("p.lab")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bound: 14"), std::string::npos);
    EXPECT_EQ(run({"verify", path("p.el"), path("p.lab"), "--max-delta", "14"}).code, 0);
    EXPECT_EQ(run({"verify", path("p.el"), path("p.lab"), "--expect-antimagic"}).code, 1);
    EXPECT_EQ(run({"verify", path("p.el"), path("p.lab"), "--max-delta", "1"}).code, 1);
}

TEST_F(Cli, ProductPipelineWithChain) {
    ASSERT_EQ(run({"gen", "complete", "4", "-o", path("k4.el")}).code, 0);
    ASSERT_EQ(run({"gen", "cycle", "3", "-o", path("c3.el")}).code, 0);
    const auto r = run({"label", "--mode", "antimagic-product", path("k4.el"), path("c3.el"), "-o", path("x.lab"),
                        "--graph-out", path("x.el")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("antimagic: yes"), std::string::npos);
    const auto v = run({"verify", path("x.el"), path("x.lab"), "--provenance", path("x.el.prov"), "--format", "json",
                        "--expect-antimagic"});
    ASSERT_EQ(v.code, 0) << v.out;
    const auto j = nlohmann::json::parse(v.out);
    EXPECT_EQ(j.at("antimagic"), true);
    EXPECT_EQ(j.at("chain_ok"), true);

    // `product` writes the same graph and sidecar.
    ASSERT_EQ(run({"product", path("k4.el"), path("c3.el"), "-o", path("y.el")}).code, 0);
    EXPECT_EQ(slurp(path("x.el")), slurp(path("y.el")));
    EXPECT_EQ(slurp(path("x.el.prov")), slurp(path("y.el.prov")));
}

TEST_F(Cli, ExitCodes) {
    ASSERT_EQ(run({"gen", "cycle", "4", "-o", path("c4.el")}).code, 0);
    EXPECT_EQ(run({"label", "--mode", "antimagic-product", path("c4.el"), path("c4.el"), "-o", path("t.lab")}).code,
              2);
    EXPECT_EQ(run({"gen", "random-regular", "7", "3"}).code, 3);
    EXPECT_EQ(run({"gen", "nosuch"}).code, 3);
    EXPECT_EQ(run({"verify", path("missing.el"), path("missing.lab")}).code, 3);
    EXPECT_EQ(run({"label", "--mode", "bogus", path("c4.el")}).code, 3);
    EXPECT_EQ(run({}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
    {
        std::ofstream(path("bad.el")) << "p 2 1\ne 0 0\n";
    }
    EXPECT_EQ(run({"export-dot", path("bad.el")}).code, 3);
    ASSERT_EQ(run({"gen", "path", "3", "-o", path("p3.el")}).code, 0);
    EXPECT_EQ(run({"label", "--mode", "approx-magic", path("p3.el")}).code, 2);
}

TEST_F(Cli, BruteForceMode) {
    ASSERT_EQ(run({"gen", "complete", "2", "-o", path("k2.el")}).code, 0);
    EXPECT_EQ(run({"label", "--mode", "brute", path("k2.el")}).code, 1);
    ASSERT_EQ(run({"gen", "complete", "4", "-o", path("k4.el")}).code, 0);
    EXPECT_EQ(run({"label", "--mode", "brute", path("k4.el"), "-o", path("k4.lab")}).code, 0);
    EXPECT_EQ(run({"verify", path("k4.el"), path("k4.lab"), "--expect-antimagic"}).code, 0);
    ASSERT_EQ(run({"gen", "petersen", "-o", path("p.el")}).code, 0);
    EXPECT_EQ(run({"label", "--mode", "brute", path("p.el")}).code, 2);
}

TEST_F(Cli, DecomposeAndDot) {
    ASSERT_EQ(run({"gen", "complete", "4", "-o", path("k4.el")}).code, 0);
    const auto d = run({"decompose", path("k4.el"), "--kind", "trails"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 2);
    ASSERT_EQ(run({"gen", "circulant", "9", "1", "2", "-o", path("c.el")}).code, 0);
    for (const char* kind : {"euler", "cycles", "circuits"}) {
        EXPECT_EQ(run({"decompose", path("c.el"), "--kind", kind}).code, 0) << kind;
    }
    EXPECT_EQ(run({"decompose", path("c.el"), "--kind", "trails"}).code, 2);
    const auto dot = run({"export-dot", path("k4.el")});
    EXPECT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);
}

TEST_F(Cli, SeededGenerationIsReproducible) {
    ASSERT_EQ(run({"gen", "random-regular", "20", "3", "--seed", "7", "-o", path("a.el")}).code, 0);
    ASSERT_EQ(run({"gen", "random-regular", "20", "3", "--seed", "7", "-o", path("b.el")}).code, 0);
    ASSERT_EQ(run({"gen", "random-regular", "20", "3", "--seed", "8", "-o", path("c.el")}).code, 0);
    EXPECT_EQ(slurp(path("a.el")), slurp(path("b.el")));
    EXPECT_NE(slurp(path("a.el")), slurp(path("c.el")));
}
