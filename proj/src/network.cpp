#include "mlcd/network.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace mlcd {

namespace {

bool sorted_insert(std::vector<NodeId>& list, NodeId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool sorted_erase(std::vector<NodeId>& list, NodeId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

bool sorted_contains(std::span<const NodeId> list, NodeId v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

NodeId MultiLayerNetwork::add_node(std::string_view label) {
  std::string key(label);
  if (auto it = node_index_.find(key); it != node_index_.end()) {
    return it->second;
  }
  NodeId id{static_cast<std::uint32_t>(node_labels_.size())};
  node_labels_.push_back(key);
  node_index_.emplace(std::move(key), id);
  out_.emplace_back(layer_labels_.size());
  in_.emplace_back(layer_labels_.size());
  ties_.emplace_back();
  return id;
}

LayerId MultiLayerNetwork::add_layer(std::string_view label) {
  std::string key(label);
  if (auto it = layer_index_.find(key); it != layer_index_.end()) {
    return it->second;
  }
  LayerId id{static_cast<std::uint32_t>(layer_labels_.size())};
  layer_labels_.push_back(key);
  layer_index_.emplace(std::move(key), id);
  for (auto& per_layer : out_) per_layer.emplace_back();
  for (auto& per_layer : in_) per_layer.emplace_back();
  layer_edge_counts_.push_back(0);
  return id;
}

void MultiLayerNetwork::add_edge(std::string_view source,
                                 std::string_view target,
                                 std::string_view layer) {
  if (source == target) {
    throw Error(ErrorKind::SelfLoop,
                "self-loop on node '" + std::string(source) + "'");
  }
  NodeId s = add_node(source);
  NodeId t = add_node(target);
  LayerId l = add_layer(layer);
  add_edge(s, t, l);
}

void MultiLayerNetwork::add_edge(NodeId source, NodeId target, LayerId l) {
  check_node(source);
  check_node(target);
  check_layer(l);
  if (source == target) {
    throw Error(ErrorKind::SelfLoop,
                "self-loop on node '" + label(source) + "'");
  }
  auto& outs = out_[source.index][l.index];
  auto it = std::lower_bound(outs.begin(), outs.end(), target);
  if (it != outs.end() && *it == target) {
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge " + label(source) + " -> " + label(target) +
                    " on layer '" + label(l) + "'");
  }
  // The pair gains a connecting layer only if the reverse edge is absent.
  bool new_tie = !has_edge(target, source, l);
  outs.insert(it, target);
  sorted_insert(in_[target.index][l.index], source);
  if (new_tie) {
    ++ties_[source.index][target];
    ++ties_[target.index][source];
  }
  ++layer_edge_counts_[l.index];
  ++edge_count_;
}

std::optional<NodeId> MultiLayerNetwork::find_node(
    std::string_view label) const {
  auto it = node_index_.find(std::string(label));
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<LayerId> MultiLayerNetwork::find_layer(
    std::string_view label) const {
  auto it = layer_index_.find(std::string(label));
  if (it == layer_index_.end()) return std::nullopt;
  return it->second;
}

NodeId MultiLayerNetwork::node(std::string_view label) const {
  if (auto id = find_node(label)) return *id;
  throw Error(ErrorKind::UnknownNode,
              "unknown node '" + std::string(label) + "'");
}

LayerId MultiLayerNetwork::layer(std::string_view label) const {
  if (auto id = find_layer(label)) return *id;
  throw Error(ErrorKind::UnknownLayer,
              "unknown layer '" + std::string(label) + "'");
}

const std::string& MultiLayerNetwork::label(NodeId v) const {
  check_node(v);
  return node_labels_[v.index];
}

const std::string& MultiLayerNetwork::label(LayerId l) const {
  check_layer(l);
  return layer_labels_[l.index];
}

std::size_t MultiLayerNetwork::edge_count(LayerId l) const {
  check_layer(l);
  return layer_edge_counts_[l.index];
}

bool MultiLayerNetwork::has_edge(NodeId source, NodeId target,
                                 LayerId l) const {
  return sorted_contains(out_neighbors(source, l), target);
}

std::span<const NodeId> MultiLayerNetwork::out_neighbors(NodeId v,
                                                         LayerId l) const {
  check_node(v);
  check_layer(l);
  return out_[v.index][l.index];
}

std::span<const NodeId> MultiLayerNetwork::in_neighbors(NodeId v,
                                                        LayerId l) const {
  check_node(v);
  check_layer(l);
  return in_[v.index][l.index];
}

std::vector<NodeId> MultiLayerNetwork::neighborhood(NodeId v,
                                                    LayerId l) const {
  auto outs = out_neighbors(v, l);
  auto ins = in_neighbors(v, l);
  std::vector<NodeId> result;
  result.reserve(outs.size() + ins.size());
  std::set_union(outs.begin(), outs.end(), ins.begin(), ins.end(),
                 std::back_inserter(result));
  return result;
}

std::vector<NodeId> MultiLayerNetwork::multilayer_neighborhood(
    NodeId v, int alpha) const {
  check_node(v);
  check_alpha(alpha);
  std::vector<NodeId> result;
  for (const auto& [neighbor, layers] : ties_[v.index]) {
    if (layers >= static_cast<std::uint32_t>(alpha)) result.push_back(neighbor);
  }
  return result;
}

std::uint32_t MultiLayerNetwork::layers_between(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  const auto& t = ties_[a.index];
  auto it = t.find(b);
  return it == t.end() ? 0 : it->second;
}

const std::map<NodeId, std::uint32_t>& MultiLayerNetwork::ties(
    NodeId v) const {
  check_node(v);
  return ties_[v.index];
}

void MultiLayerNetwork::unlink(NodeId source, NodeId target, LayerId l) {
  sorted_erase(out_[source.index][l.index], target);
  sorted_erase(in_[target.index][l.index], source);
  --layer_edge_counts_[l.index];
  --edge_count_;
}

std::size_t MultiLayerNetwork::remove_pair_edges(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  std::size_t removed = 0;
  if (a == b) return removed;
  for (std::uint32_t i = 0; i < layer_labels_.size(); ++i) {
    LayerId l{i};
    if (has_edge(a, b, l)) {
      unlink(a, b, l);
      ++removed;
    }
    if (has_edge(b, a, l)) {
      unlink(b, a, l);
      ++removed;
    }
  }
  ties_[a.index].erase(b);
  ties_[b.index].erase(a);
  return removed;
}

std::vector<LayerEdge> MultiLayerNetwork::edges() const {
  std::vector<LayerEdge> result;
  result.reserve(edge_count_);
  for (std::uint32_t s = 0; s < node_labels_.size(); ++s) {
    for (std::uint32_t l = 0; l < layer_labels_.size(); ++l) {
      for (NodeId t : out_[s][l]) {
        result.push_back({NodeId{s}, t, LayerId{l}});
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

void MultiLayerNetwork::check_alpha(int alpha) const {
  if (alpha < 1 || static_cast<std::size_t>(alpha) > layer_labels_.size()) {
    throw Error(ErrorKind::AlphaOutOfRange,
                "alpha must be in [1, " +
                    std::to_string(layer_labels_.size()) + "], got " +
                    std::to_string(alpha));
  }
}

void MultiLayerNetwork::check_node(NodeId v) const {
  if (v.index >= node_labels_.size()) {
    throw Error(ErrorKind::UnknownNode,
                "unknown node handle " + std::to_string(v.index));
  }
}

void MultiLayerNetwork::check_layer(LayerId l) const {
  if (l.index >= layer_labels_.size()) {
    throw Error(ErrorKind::UnknownLayer,
                "unknown layer handle " + std::to_string(l.index));
  }
}

bool operator==(const MultiLayerNetwork& a, const MultiLayerNetwork& b) {
  auto node_set = [](const MultiLayerNetwork& n) {
    return std::set<std::string>(n.node_labels_.begin(), n.node_labels_.end());
  };
  auto layer_set = [](const MultiLayerNetwork& n) {
    return std::set<std::string>(n.layer_labels_.begin(),
                                 n.layer_labels_.end());
  };
  auto edge_set = [](const MultiLayerNetwork& n) {
    std::set<std::tuple<std::string, std::string, std::string>> result;
    for (const auto& e : n.edges()) {
      result.emplace(n.label(e.source), n.label(e.target), n.label(e.layer));
    }
    return result;
  };
  return a.edge_count() == b.edge_count() && node_set(a) == node_set(b) &&
         layer_set(a) == layer_set(b) && edge_set(a) == edge_set(b);
}

MultiLayerNetwork project_layer(const MultiLayerNetwork& net, LayerId l) {
  const std::string& layer_label = net.label(l);
  MultiLayerNetwork result;
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    result.add_node(net.label(NodeId{v}));
  }
  LayerId target_layer = result.add_layer(layer_label);
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    for (NodeId t : net.out_neighbors(NodeId{v}, l)) {
      result.add_edge(NodeId{v}, t, target_layer);
    }
  }
  return result;
}

std::vector<NodeId> neighborhood(const MultiLayerNetwork& net, NodeId v,
                                 LayerId l) {
  return net.neighborhood(v, l);
}

std::vector<NodeId> multilayer_neighborhood(const MultiLayerNetwork& net,
                                            NodeId v, int alpha) {
  return net.multilayer_neighborhood(v, alpha);
}

bool FlatGraph::add_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw Error(ErrorKind::SelfLoop, "flat graph cannot hold a loop");
  }
  if (!sorted_insert(adjacency_.at(a.index), b)) return false;
  sorted_insert(adjacency_.at(b.index), a);
  ++edge_count_;
  return true;
}

bool FlatGraph::remove_edge(NodeId a, NodeId b) {
  if (!sorted_erase(adjacency_.at(a.index), b)) return false;
  sorted_erase(adjacency_.at(b.index), a);
  --edge_count_;
  return true;
}

bool FlatGraph::has_edge(NodeId a, NodeId b) const {
  return sorted_contains(adjacency_.at(a.index), b);
}

std::vector<NodePair> FlatGraph::edges() const {
  std::vector<NodePair> result;
  result.reserve(edge_count_);
  for (std::uint32_t v = 0; v < adjacency_.size(); ++v) {
    for (NodeId w : adjacency_[v]) {
      if (NodeId{v} < w) result.push_back({NodeId{v}, w});
    }
  }
  return result;
}

FlatGraph flatten_alpha(const MultiLayerNetwork& net, int alpha) {
  net.check_alpha(alpha);
  FlatGraph g(net.node_count());
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    for (const auto& [w, layers] : net.ties(NodeId{v})) {
      if (NodeId{v} < w && layers >= static_cast<std::uint32_t>(alpha)) {
        g.add_edge(NodeId{v}, w);
      }
    }
  }
  return g;
}

std::vector<NodeId> component_of(const FlatGraph& g, NodeId start) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{start};
  std::vector<NodeId> members;
  seen.at(start.index) = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (!seen[w.index]) {
        seen[w.index] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<NodeId>> connected_components(const FlatGraph& g) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<std::vector<NodeId>> result;
  std::vector<NodeId> stack;
  for (std::uint32_t root = 0; root < g.node_count(); ++root) {
    if (seen[root]) continue;
    std::vector<NodeId> members;
    seen[root] = 1;
    stack.push_back(NodeId{root});
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w.index]) {
          seen[w.index] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

}  // namespace mlcd
