#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mlcd/network.hpp"
#include "mlcd/random.hpp"

namespace mlcd::testing {

/// Random multi-layer network with per-layer densities drawn from a spread
/// of sparse and dense values. Edges are directed and independent, so
/// one-directional and reciprocal ties both occur.
inline MultiLayerNetwork random_network(std::uint64_t seed,
                                        std::size_t max_nodes,
                                        std::size_t max_layers) {
  Rng rng(seed);
  const std::size_t n = 2 + uniform_below(rng, max_nodes - 1);
  const std::size_t layers = 1 + uniform_below(rng, max_layers);
  constexpr double kDensities[] = {0.05, 0.1, 0.2, 0.35, 0.6};
  MultiLayerNetwork net;
  for (std::size_t v = 0; v < n; ++v) {
    net.add_node((v < 10 ? "n0" : "n") + std::to_string(v));
  }
  for (std::size_t l = 0; l < layers; ++l) {
    LayerId layer = net.add_layer("l" + std::to_string(l + 1));
    double p = kDensities[uniform_below(rng, std::size(kDensities))];
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (a != b && uniform_unit(rng) < p) {
          net.add_edge(NodeId{a}, NodeId{b}, layer);
        }
      }
    }
  }
  return net;
}

inline std::vector<std::string> labels(const MultiLayerNetwork& net,
                                       const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (NodeId v : ids) out.push_back(net.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mlcd::testing
