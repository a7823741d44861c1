#include <gtest/gtest.h>

#include "mlcd/detector.hpp"
#include "mlcd/generators.hpp"
#include "mlcd/io.hpp"
#include "mlcd/measures.hpp"
#include "mlcd/oracle.hpp"
#include "support.hpp"

namespace mlcd {
namespace {

TEST(NaiveClecc, ClosedForms) {
  auto tri = fixture_triangle();
  EXPECT_EQ(oracle::naive_clecc(tri, tri.node("a"), tri.node("b"), 1), 1.0);
  auto path = fixture_path();
  EXPECT_EQ(oracle::naive_clecc(path, path.node("a"), path.node("b"), 1), 0.0);
  auto sq = fixture_square_diagonal();
  EXPECT_EQ(oracle::naive_clecc(sq, sq.node("a"), sq.node("b"), 1), 0.5);
  EXPECT_EQ(oracle::naive_clecc(sq, sq.node("a"), sq.node("c"), 1), 1.0);
  auto dyad = fixture_dyad();
  EXPECT_EQ(oracle::naive_clecc(dyad, dyad.node("a"), dyad.node("b"), 1), 1.0);
  EXPECT_THROW(oracle::naive_clecc(dyad, dyad.node("a"), dyad.node("b"), 2),
               Error);
}

TEST(NaiveClecc, AgreesOnRandomSamples) {
  Rng rng(2024);
  int samples = 0;
  for (std::uint64_t seed = 1; samples < 500; ++seed) {
    auto net = testing::random_network(seed, 24, 4);
    for (int k = 0; k < 10; ++k, ++samples) {
      auto a = static_cast<std::uint32_t>(uniform_below(rng, net.node_count()));
      auto b = static_cast<std::uint32_t>(uniform_below(rng, net.node_count() - 1));
      if (b >= a) ++b;
      int alpha = 1 + static_cast<int>(uniform_below(rng, net.layer_count()));
      ASSERT_EQ(oracle::naive_clecc(net, NodeId{a}, NodeId{b}, alpha),
                clecc(net, NodeId{a}, NodeId{b}, alpha));
    }
  }
}

TEST(NaiveCleccTable, MatchesTable) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto net = testing::random_network(seed, 16, 3);
    for (int alpha = 1; alpha <= static_cast<int>(net.layer_count()); ++alpha) {
      auto reference = oracle::naive_clecc_table(net, alpha);
      auto table = clecc_table(net, alpha);
      ASSERT_EQ(reference.size(), table.size());
      for (const auto& [pair, ratio] : table.entries()) {
        EXPECT_EQ(reference.at({pair.first, pair.second}), ratio.value());
      }
    }
  }
}

TEST(NaiveDetect, Fixtures) {
  DetectionConfig c;
  c.validity = MinSize{3};
  c.log_removals = true;
  for (const auto& net : {fixture_barbell(), fixture_triangle()}) {
    EXPECT_EQ(write_result(oracle::naive_detect(net, c)),
              write_result(run_detection(net, c)));
  }
  auto barbell = oracle::naive_detect(fixture_barbell(), c);
  EXPECT_EQ(barbell.groups.size(), 2u);
  auto triangle = oracle::naive_detect(fixture_triangle(), c);
  EXPECT_EQ(triangle.singletons.size(), 3u);
  EXPECT_EQ(triangle.removals.size(), 3u);
}

TEST(NaiveDetect, RejectsRandomTies) {
  DetectionConfig c;
  c.tie_policy = SeededRandom{1};
  try {
    oracle::naive_detect(fixture_triangle(), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidConfig);
  }
}

TEST(NaiveDetect, MatchesDetectorOnRandomNetworks) {
  std::vector<ValidityCondition> conditions{MinSize{3}, WeakCommunity{},
                                            StrongCommunity{}};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto net = testing::random_network(seed + 500, 16, 3);
    for (int alpha = 1; alpha <= static_cast<int>(net.layer_count()); ++alpha) {
      DetectionConfig c;
      c.alpha = alpha;
      c.validity = conditions[seed % conditions.size()];
      c.log_removals = true;
      ASSERT_EQ(oracle::naive_detect(net, c), run_detection(net, c))
          << "seed " << seed << " alpha " << alpha;
    }
  }
}

}  // namespace
}  // namespace mlcd
