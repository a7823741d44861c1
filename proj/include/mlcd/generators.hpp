#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlcd/evaluation.hpp"
#include "mlcd/network.hpp"

namespace mlcd {

struct PlantedParams {
  std::vector<std::size_t> community_sizes;
  std::size_t layers = 1;
  // One value per layer, or a single value applied to every layer.
  std::vector<double> p_in;
  std::vector<double> p_out;
  std::uint64_t seed = 0;
};

struct PlantedNetwork {
  MultiLayerNetwork network;
  Partition truth;
};

/// Planted partition: for each layer and each unordered pair, adds the
/// reciprocal edges with p_in inside a community and p_out across. Nodes are
/// labelled v00, v01, ... in community order; layers l1, l2, ...
/// Throws InvalidParams.
PlantedNetwork generate_planted(const PlantedParams& params);

/// 1000 nodes on four layers holding 50000, 50000, 5000 and 5000 directed
/// edges drawn uniformly without loops or repeats.
MultiLayerNetwork generate_density_scenario(std::uint64_t seed);

// Hand-built fixtures.

/// The eight layer-l1 edges over x, y, z, u, v of the worked example.
MultiLayerNetwork fixture_paper_l1();
/// Reciprocal triangle a, b, c on layer l1.
MultiLayerNetwork fixture_triangle();
/// Reciprocal path a - b - c on layer l1.
MultiLayerNetwork fixture_path();
/// Square a-b-c-d-a with the diagonal a-c, reciprocal, layer l1.
MultiLayerNetwork fixture_square_diagonal();
/// l1: x-y, x-u, y-u; l2: x-y, x-u; all reciprocal.
MultiLayerNetwork fixture_two_layer_toy();
/// Triangles a,b,c and d,e,f joined by a reciprocal c-d bridge on l1.
MultiLayerNetwork fixture_barbell();
/// A single reciprocal pair a - b on l1.
MultiLayerNetwork fixture_dyad();

}  // namespace mlcd
