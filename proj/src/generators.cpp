#include "mlcd/generators.hpp"

#include <array>
#include <numeric>
#include <unordered_set>

#include "mlcd/random.hpp"

namespace mlcd {

namespace {

std::string padded(char prefix, std::size_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

double per_layer(const std::vector<double>& values, std::size_t layer) {
  return values.size() == 1 ? values.front() : values[layer];
}

void check_probabilities(const std::vector<double>& values, std::size_t layers,
                         const char* name) {
  if (values.size() != 1 && values.size() != layers) {
    throw Error(ErrorKind::InvalidParams,
                std::string(name) + " needs 1 or " + std::to_string(layers) +
                    " values, got " + std::to_string(values.size()));
  }
  for (double p : values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::InvalidParams,
                  std::string(name) + " must lie in [0, 1]");
    }
  }
}

void add_reciprocal(MultiLayerNetwork& net, std::string_view a,
                    std::string_view b, std::string_view layer) {
  net.add_edge(a, b, layer);
  net.add_edge(b, a, layer);
}

}  // namespace

PlantedNetwork generate_planted(const PlantedParams& params) {
  if (params.community_sizes.empty()) {
    throw Error(ErrorKind::InvalidParams, "at least one community is needed");
  }
  for (std::size_t size : params.community_sizes) {
    if (size < 1) {
      throw Error(ErrorKind::InvalidParams, "community sizes must be >= 1");
    }
  }
  if (params.layers < 1) {
    throw Error(ErrorKind::InvalidParams, "layer count must be >= 1");
  }
  check_probabilities(params.p_in, params.layers, "p_in");
  check_probabilities(params.p_out, params.layers, "p_out");

  const std::size_t n = std::accumulate(params.community_sizes.begin(),
                                        params.community_sizes.end(),
                                        std::size_t{0});
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();

  PlantedNetwork planted;
  std::vector<std::size_t> community;
  std::vector<NodeId> ids;
  for (std::size_t c = 0; c < params.community_sizes.size(); ++c) {
    for (std::size_t i = 0; i < params.community_sizes[c]; ++i) {
      std::string label = padded('v', community.size(), width);
      ids.push_back(planted.network.add_node(label));
      planted.truth.emplace(std::move(label), c);
      community.push_back(c);
    }
  }
  std::vector<LayerId> layers;
  for (std::size_t l = 0; l < params.layers; ++l) {
    layers.push_back(planted.network.add_layer("l" + std::to_string(l + 1)));
  }

  Rng rng(params.seed);
  for (std::size_t l = 0; l < params.layers; ++l) {
    const double p_in = per_layer(params.p_in, l);
    const double p_out = per_layer(params.p_out, l);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double p = community[i] == community[j] ? p_in : p_out;
        if (uniform_unit(rng) < p) {
          planted.network.add_edge(ids[i], ids[j], layers[l]);
          planted.network.add_edge(ids[j], ids[i], layers[l]);
        }
      }
    }
  }
  return planted;
}

MultiLayerNetwork generate_density_scenario(std::uint64_t seed) {
  constexpr std::size_t kNodes = 1000;
  constexpr std::array<std::size_t, 4> kLayerEdges{50000, 50000, 5000, 5000};

  MultiLayerNetwork net;
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < kNodes; ++i) {
    ids.push_back(net.add_node(padded('v', i, 3)));
  }
  Rng rng(seed);
  for (std::size_t l = 0; l < kLayerEdges.size(); ++l) {
    LayerId layer = net.add_layer("l" + std::to_string(l + 1));
    std::unordered_set<std::uint64_t> taken;
    while (taken.size() < kLayerEdges[l]) {
      auto source = uniform_below(rng, kNodes);
      auto target = uniform_below(rng, kNodes);
      if (source == target) continue;
      if (!taken.insert(source * kNodes + target).second) continue;
      net.add_edge(ids[source], ids[target], layer);
    }
  }
  return net;
}

MultiLayerNetwork fixture_paper_l1() {
  MultiLayerNetwork net;
  net.add_edge("x", "y", "l1");
  net.add_edge("y", "x", "l1");
  net.add_edge("x", "z", "l1");
  net.add_edge("z", "x", "l1");
  net.add_edge("y", "z", "l1");
  net.add_edge("u", "z", "l1");
  net.add_edge("u", "v", "l1");
  net.add_edge("v", "u", "l1");
  return net;
}

MultiLayerNetwork fixture_triangle() {
  MultiLayerNetwork net;
  add_reciprocal(net, "a", "b", "l1");
  add_reciprocal(net, "b", "c", "l1");
  add_reciprocal(net, "a", "c", "l1");
  return net;
}

MultiLayerNetwork fixture_path() {
  MultiLayerNetwork net;
  add_reciprocal(net, "a", "b", "l1");
  add_reciprocal(net, "b", "c", "l1");
  return net;
}

MultiLayerNetwork fixture_square_diagonal() {
  MultiLayerNetwork net;
  add_reciprocal(net, "a", "b", "l1");
  add_reciprocal(net, "b", "c", "l1");
  add_reciprocal(net, "c", "d", "l1");
  add_reciprocal(net, "d", "a", "l1");
  add_reciprocal(net, "a", "c", "l1");
  return net;
}

MultiLayerNetwork fixture_two_layer_toy() {
  MultiLayerNetwork net;
  add_reciprocal(net, "x", "y", "l1");
  add_reciprocal(net, "x", "u", "l1");
  add_reciprocal(net, "y", "u", "l1");
  add_reciprocal(net, "x", "y", "l2");
  add_reciprocal(net, "x", "u", "l2");
  return net;
}

MultiLayerNetwork fixture_barbell() {
  MultiLayerNetwork net;
  add_reciprocal(net, "a", "b", "l1");
  add_reciprocal(net, "b", "c", "l1");
  add_reciprocal(net, "a", "c", "l1");
  add_reciprocal(net, "d", "e", "l1");
  add_reciprocal(net, "e", "f", "l1");
  add_reciprocal(net, "d", "f", "l1");
  add_reciprocal(net, "c", "d", "l1");
  return net;
}

MultiLayerNetwork fixture_dyad() {
  MultiLayerNetwork net;
  add_reciprocal(net, "a", "b", "l1");
  return net;
}

}  // namespace mlcd
