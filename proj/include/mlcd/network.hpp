#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlcd/error.hpp"

namespace mlcd {

/// Dense handle of a node inside one MultiLayerNetwork.
struct NodeId {
  std::uint32_t index = 0;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Dense handle of a layer inside one MultiLayerNetwork.
struct LayerId {
  std::uint32_t index = 0;
  friend auto operator<=>(const LayerId&, const LayerId&) = default;
};

struct LayerEdge {
  NodeId source;
  NodeId target;
  LayerId layer;
  friend auto operator<=>(const LayerEdge&, const LayerEdge&) = default;
};

/// Unordered node pair, stored with `first < second`.
struct NodePair {
  NodeId first;
  NodeId second;

  static NodePair of(NodeId a, NodeId b) noexcept {
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }
  bool contains(NodeId v) const noexcept { return first == v || second == v; }
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// A multi-layered social network: nodes, layers and directed edges tagged
/// with a layer. Loops are rejected and each (source, target, layer) triple
/// may occur at most once.
///
/// Besides the directed adjacency the network keeps, for every node, the
/// number of layers connecting it to each neighbour (either direction).
/// Multi-layered neighbourhoods are threshold scans over that count.
class MultiLayerNetwork {
 public:
  MultiLayerNetwork() = default;

  /// Registers a node; returns the existing handle when the label is known.
  NodeId add_node(std::string_view label);
  LayerId add_layer(std::string_view label);

  /// Adds the edge, auto-registering unknown labels.
  void add_edge(std::string_view source, std::string_view target,
                std::string_view layer);
  void add_edge(NodeId source, NodeId target, LayerId layer);

  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<LayerId> find_layer(std::string_view label) const;
  NodeId node(std::string_view label) const;    // throws UnknownNode
  LayerId layer(std::string_view label) const;  // throws UnknownLayer

  const std::string& label(NodeId v) const;
  const std::string& label(LayerId l) const;

  std::size_t node_count() const noexcept { return node_labels_.size(); }
  std::size_t layer_count() const noexcept { return layer_labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t edge_count(LayerId l) const;

  bool has_edge(NodeId source, NodeId target, LayerId l) const;
  std::span<const NodeId> out_neighbors(NodeId v, LayerId l) const;
  std::span<const NodeId> in_neighbors(NodeId v, LayerId l) const;

  /// Nodes linked to `v` in layer `l` in either direction, sorted.
  std::vector<NodeId> neighborhood(NodeId v, LayerId l) const;

  /// Nodes linked to `v` on at least `alpha` layers, sorted.
  std::vector<NodeId> multilayer_neighborhood(NodeId v, int alpha) const;

  /// Number of layers on which `a` and `b` are linked in either direction.
  std::uint32_t layers_between(NodeId a, NodeId b) const;

  /// Neighbour -> connecting layer count for `v`, ordered by neighbour.
  const std::map<NodeId, std::uint32_t>& ties(NodeId v) const;

  /// Deletes every edge between `a` and `b` on every layer in both
  /// directions. Returns the number of directed edges deleted.
  std::size_t remove_pair_edges(NodeId a, NodeId b);

  /// All edges ordered by (source, target, layer).
  std::vector<LayerEdge> edges() const;

  /// Throws AlphaOutOfRange unless 1 <= alpha <= layer_count().
  void check_alpha(int alpha) const;

  /// Structural equality on labels: same node labels, layer labels and
  /// labelled edge triples, independent of internal handle order.
  friend bool operator==(const MultiLayerNetwork& a,
                         const MultiLayerNetwork& b);

 private:
  void check_node(NodeId v) const;
  void check_layer(LayerId l) const;
  void unlink(NodeId source, NodeId target, LayerId l);

  std::vector<std::string> node_labels_;
  std::vector<std::string> layer_labels_;
  std::unordered_map<std::string, NodeId> node_index_;
  std::unordered_map<std::string, LayerId> layer_index_;
  // [node][layer] -> sorted neighbour list
  std::vector<std::vector<std::vector<NodeId>>> out_;
  std::vector<std::vector<std::vector<NodeId>>> in_;
  std::vector<std::map<NodeId, std::uint32_t>> ties_;
  std::vector<std::size_t> layer_edge_counts_;
  std::size_t edge_count_ = 0;
};

/// The single-layer network made of every node of `net` and the edges of
/// layer `l` only.
MultiLayerNetwork project_layer(const MultiLayerNetwork& net, LayerId l);

/// Free-function forms of the neighbourhood queries.
std::vector<NodeId> neighborhood(const MultiLayerNetwork& net, NodeId v,
                                 LayerId l);
std::vector<NodeId> multilayer_neighborhood(const MultiLayerNetwork& net,
                                            NodeId v, int alpha);

/// Undirected simple graph over dense node handles.
class FlatGraph {
 public:
  FlatGraph() = default;
  explicit FlatGraph(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Returns false when the edge already existed.
  bool add_edge(NodeId a, NodeId b);
  /// Returns false when there was no such edge.
  bool remove_edge(NodeId a, NodeId b);
  bool has_edge(NodeId a, NodeId b) const;

  std::span<const NodeId> neighbors(NodeId v) const {
    return adjacency_.at(v.index);
  }
  std::size_t degree(NodeId v) const { return adjacency_.at(v.index).size(); }

  std::vector<NodePair> edges() const;

  friend bool operator==(const FlatGraph&, const FlatGraph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Undirected graph with edge {x,y} iff x and y are linked on >= alpha layers.
FlatGraph flatten_alpha(const MultiLayerNetwork& net, int alpha);

/// Components of `g`, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const FlatGraph& g);

/// Nodes reachable from `start` in `g` (including `start`), sorted.
std::vector<NodeId> component_of(const FlatGraph& g, NodeId start);

}  // namespace mlcd
