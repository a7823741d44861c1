#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mlcd/cli.hpp"
#include "mlcd/generators.hpp"
#include "mlcd/io.hpp"

namespace mlcd {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mlcd_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const MultiLayerNetwork& net) {
    std::ostringstream text;
    write_edge_list(net, text);
    return write(name, text.str());
  }
  std::string write(const std::string& name, const std::string& text) {
    auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string read(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DetectBarbell) {
  auto input = write("barbell.csv", fixture_barbell());
  auto r = run({"detect", "--input", input, "--alpha", "1", "--validity",
                "min-size:3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(R"("groups":[{"id":0,"nodes":["a","b","c"]},{"id":1,"nodes":["d","e","f"]}])"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find(R"("singletons":[])"), std::string::npos);
}

TEST_F(CliTest, DetectWritesOutputFileAndLog) {
  auto input = write("triangle.csv", fixture_triangle());
  auto output = path("result.json");
  auto r = run({"detect", "--input", input, "--alpha", "1", "--validity",
                "min-size:3", "--log-removals", "--output", output});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto json = read(output);
  EXPECT_NE(json.find(R"("singletons":["a","b","c"])"), std::string::npos);
  EXPECT_NE(json.find(R"("step":3)"), std::string::npos);
}

TEST_F(CliTest, AlphaOutOfRangeIsDataError) {
  MultiLayerNetwork net;
  net.add_edge("a", "b", "l1");
  net.add_edge("a", "b", "l2");
  net.add_edge("b", "c", "l3");
  auto input = write("three.csv", net);
  auto r = run({"detect", "--input", input, "--alpha", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("[1, 3]"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  auto input = write("barbell.csv", fixture_barbell());
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"detect", "--input", input, "--alpha", "1", "--ties", "random"},
           {"detect", "--input", input, "--alpha", "1", "--validity", "huge"},
           {"detect", "--input", input, "--alpha", "1", "--ties", "coin"},
           {"detect", "--input", input},
           {"detect", "--input", input, "--alpha", "1", "--delimiter", "ab"},
           {"measure", "--input", input, "--alpha", "1", "--pair", "a"},
           {"frobnicate"},
           {},
           {"detect", "--input", input, "--alpha", "1", "--ties", "random",
            "--seed", "3", "--oracle"},
       }) {
    auto r = run(args);
    EXPECT_EQ(r.code, 1) << (args.empty() ? "" : args.front()) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST_F(CliTest, DataErrors) {
  auto bad = write("bad.csv", "a,b,l1\na,a,l1\n");
  auto r = run({"detect", "--input", bad, "--alpha", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = run({"detect", "--input", path("missing.csv"), "--alpha", "1"});
  EXPECT_EQ(r.code, 2);

  auto dup = write("dup.csv", "x,y,l1\nx,y,l1\n");
  EXPECT_EQ(run({"measure", "--input", dup, "--alpha", "1"}).code, 2);
  r = run({"measure", "--input", dup, "--alpha", "1", "--dedupe"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("dropped 1"), std::string::npos);

  auto toy = write("toy2.csv", fixture_two_layer_toy());
  EXPECT_EQ(run({"measure", "--input", toy, "--alpha", "1", "--pair", "x,q"}).code,
            2);
}

TEST_F(CliTest, MeasurePairAndTable) {
  auto toy = write("toy2.csv", fixture_two_layer_toy());
  auto r = run({"measure", "--input", toy, "--alpha", "2", "--pair", "x,y"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0.0\n");

  auto sq = write("square.csv", fixture_square_diagonal());
  r = run({"measure", "--input", sq, "--alpha", "1", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "x,y,clecc\na,b,0.5\na,c,1.0\na,d,0.5\nb,c,0.5\nc,d,0.5\n");
}

TEST_F(CliTest, DetectOracleCrossCheck) {
  auto input = write("barbell.csv", fixture_barbell());
  auto r = run({"detect", "--input", input, "--alpha", "1", "--oracle",
                "--log-removals"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("oracle check passed"), std::string::npos);
}

TEST_F(CliTest, GenerateAndEvaluate) {
  auto edges = path("planted.csv");
  auto truth = path("truth.json");
  auto r = run({"generate", "planted", "--sizes", "16,16", "--layers", "3",
                "--p-in", "0.5", "--p-out", "0.05", "--seed", "7", "--output",
                edges, "--truth", truth});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(edges);
  auto parsed = parse_edge_list(in);
  EXPECT_EQ(parsed.network,
            generate_planted({{16, 16}, 3, {0.5}, {0.05}, 7}).network);

  auto predicted = path("predicted.json");
  r = run({"detect", "--input", edges, "--alpha", "2", "--output", predicted});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"eval", "nmi", "--truth", truth, "--predicted", truth});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.0\n");
  r = run({"eval", "nmi", "--truth", truth, "--predicted", predicted});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_GT(std::stod(r.out), 0.5);

  auto other = write("other.json", R"({"groups":[],"singletons":["zz"]})");
  EXPECT_EQ(run({"eval", "nmi", "--truth", truth, "--predicted", other}).code,
            2);
  EXPECT_EQ(run({"generate", "planted", "--sizes", "4", "--layers", "1",
                 "--p-in", "2", "--p-out", "0", "--seed", "1"})
                .code,
            1);
}

TEST_F(CliTest, GenerateScenario) {
  auto out = path("scenario.csv");
  auto r = run({"generate", "scenario4", "--seed", "5", "--output", out});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  auto parsed = parse_edge_list(in);
  EXPECT_EQ(parsed.network.edge_count(), 110000u);
}

TEST_F(CliTest, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("detect"), std::string::npos);
  EXPECT_EQ(r.out.find("--oracle"), std::string::npos);
}

}  // namespace
}  // namespace mlcd
