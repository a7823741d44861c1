#include <gtest/gtest.h>

#include <sstream>

#include "mlcd/generators.hpp"
#include "mlcd/io.hpp"
#include "support.hpp"

namespace mlcd {
namespace {

ParsedEdgeList parse(const std::string& text, ParseOptions options = {}) {
  std::istringstream in(text);
  return parse_edge_list(in, options);
}

Error parse_error(const std::string& text, ParseOptions options = {}) {
  try {
    parse(text, options);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Error(ErrorKind::InvalidParams, "none");
}

constexpr const char* kReferenceCsv =
    "x,y,l1\ny,x,l1\nx,z,l1\nz,x,l1\ny,z,l1\nu,z,l1\nu,v,l1\nv,u,l1\n";

TEST(ParseEdgeList, ReferenceFixture) {
  auto parsed = parse(kReferenceCsv);
  EXPECT_EQ(parsed.network, fixture_paper_l1());
  EXPECT_FALSE(parsed.had_header);
}

TEST(ParseEdgeList, HeaderCommentsBlankLinesAndCrlf) {
  auto parsed =
      parse("# comment\n\nsource,target,layer\r\na,b,l1\r\n\n# more\nb,a,l2\n");
  EXPECT_TRUE(parsed.had_header);
  EXPECT_EQ(parsed.network.edge_count(), 2u);
  EXPECT_EQ(parsed.network.layer_count(), 2u);
}

TEST(ParseEdgeList, HeaderOnlyCountsOnFirstLine) {
  // Past the first line the header text is an ordinary record.
  auto parsed = parse("a,b,l1\nsource,target,layer\n");
  EXPECT_FALSE(parsed.had_header);
  EXPECT_EQ(parsed.network.edge_count(), 2u);
  EXPECT_TRUE(parsed.network.find_layer("layer").has_value());
}

TEST(ParseEdgeList, CustomDelimiter) {
  auto parsed = parse("source\ttarget\tlayer\na,b\tc\tl1\n", {'\t', false});
  EXPECT_EQ(parsed.network.edge_count(), 1u);
  EXPECT_TRUE(parsed.network.find_node("a,b").has_value());
}

TEST(ParseEdgeList, MalformedLineNamesLine) {
  auto e = parse_error("a,b,l1\na,b\n");
  EXPECT_EQ(e.kind(), ErrorKind::MalformedLine);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(parse_error("a,b,l1,x\n").kind(), ErrorKind::MalformedLine);
  EXPECT_EQ(parse_error("a,,l1\n").kind(), ErrorKind::MalformedLine);
}

TEST(ParseEdgeList, SelfLoopNamesLine) {
  auto e = parse_error("x,y,l1\na,a,l1\n");
  EXPECT_EQ(e.kind(), ErrorKind::SelfLoop);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
}

TEST(ParseEdgeList, Duplicates) {
  auto e = parse_error("x,y,l1\nx,y,l1\n");
  EXPECT_EQ(e.kind(), ErrorKind::DuplicateEdge);
  EXPECT_EQ(e.line(), 2u);

  auto parsed = parse("x,y,l1\nx,y,l1\n", {',', true});
  EXPECT_EQ(parsed.network.edge_count(), 1u);
  EXPECT_EQ(parsed.duplicates_dropped, 1u);
}

TEST(ParseEdgeList, LabelsAreOpaque) {
  auto parsed = parse("01,1,l1\n");
  EXPECT_EQ(parsed.network.node_count(), 2u);
}

TEST(EdgeListRoundTrip, RandomNetworks) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto net = testing::random_network(seed, 20, 3);
    std::ostringstream out;
    write_edge_list(net, out);
    auto back = parse(out.str());
    EXPECT_TRUE(back.had_header);
    EXPECT_EQ(back.network.edges().size(), net.edge_count());
    // Isolated nodes are not representable in an edge list.
    MultiLayerNetwork linked;
    for (const auto& e : net.edges()) {
      linked.add_edge(net.label(e.source), net.label(e.target),
                      net.label(e.layer));
    }
    EXPECT_EQ(back.network, linked);
  }
}

TEST(WriteResult, BarbellShape) {
  DetectionResult r;
  r.config.alpha = 1;
  r.config.validity = MinSize{3};
  r.groups = {{{"d", "e", "f"}, 1}, {{"a", "b", "c"}, 1}};
  EXPECT_EQ(write_result(r),
            R"({"alpha":1,"validity":"min-size:3","tie_policy":"lex",)"
            R"("seed":null,"groups":[{"id":0,"nodes":["a","b","c"]},)"
            R"({"id":1,"nodes":["d","e","f"]}],"singletons":[],"removals":[]})");
}

TEST(WriteResult, EmptyResult) {
  auto json = write_result(DetectionResult{});
  EXPECT_NE(json.find(R"("groups":[])"), std::string::npos);
  EXPECT_NE(json.find(R"("singletons":[])"), std::string::npos);
}

TEST(WriteResult, RemovalsAndSeed) {
  DetectionResult r;
  r.config.tie_policy = SeededRandom{42};
  r.config.validity = StrongCommunity{};
  r.singletons = {"c", "a", "b"};
  r.removals = {{1, "b", "a", 1.0, 2}, {2, "a", "c", 0.5, 3}};
  EXPECT_EQ(write_result(r),
            R"({"alpha":1,"validity":"strong","tie_policy":"random",)"
            R"("seed":42,"groups":[],"singletons":["a","b","c"],)"
            R"("removals":[{"step":1,"pair":["a","b"],"clecc":1.0,)"
            R"("edges_removed":2},{"step":2,"pair":["a","c"],"clecc":0.5,)"
            R"("edges_removed":3}]})");
  EXPECT_EQ(write_result(r, true).front(), '{');
  EXPECT_NE(write_result(r, true).find("\n  \"alpha\": 1"), std::string::npos);
}

TEST(PartitionJson, RoundTrip) {
  Partition p{{"a", 0}, {"b", 0}, {"c", 1}, {"d", 2}, {"e", 2}};
  auto back = read_partition(write_partition(p));
  EXPECT_EQ(back.size(), p.size());
  EXPECT_EQ(back.at("a"), back.at("b"));
  EXPECT_EQ(back.at("d"), back.at("e"));
  EXPECT_NE(back.at("a"), back.at("c"));
  EXPECT_NE(back.at("c"), back.at("d"));
}

TEST(PartitionJson, ReadsDetectionOutput) {
  DetectionResult r;
  r.groups = {{{"a", "b"}, 1}};
  r.singletons = {"c"};
  auto p = read_partition(write_result(r));
  EXPECT_EQ(p, (Partition{{"a", 0}, {"b", 0}, {"c", 1}}));
}

TEST(PartitionJson, Malformed) {
  for (const char* text :
       {"not json", "[]", "{}", R"({"groups":[{"nodes":[1]}]})",
        R"({"groups":[{"id":0}]})", R"({"singletons":["a","a"]})"}) {
    try {
      read_partition(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedDocument) << text;
    }
  }
}

TEST(FormatReal, AlwaysHasFraction) {
  EXPECT_EQ(format_real(0.0), "0.0");
  EXPECT_EQ(format_real(1.0), "1.0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.3333333333333333");
}

}  // namespace
}  // namespace mlcd
