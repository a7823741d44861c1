#include "mlcd/measures.hpp"

#include <algorithm>

namespace mlcd {

namespace {

std::uint32_t intersection_size(std::span<const NodeId> a,
                                std::span<const NodeId> b) {
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

CleccRatio ratio_from_neighborhoods(std::span<const NodeId> mx,
                                    std::span<const NodeId> my, NodeId x,
                                    NodeId y) {
  std::uint32_t shared = intersection_size(mx, my);
  auto united = static_cast<std::uint32_t>(mx.size() + my.size()) - shared;
  // x and y are never in their own neighbourhoods, so they can enter the
  // union only through each other.
  if (std::binary_search(mx.begin(), mx.end(), y)) --united;
  if (std::binary_search(my.begin(), my.end(), x)) --united;
  return CleccRatio::from_counts(shared, united);
}

}  // namespace

std::optional<double> ecc(const MultiLayerNetwork& net, LayerId layer,
                          NodeId x, NodeId y) {
  auto nx = net.neighborhood(x, layer);
  auto ny = net.neighborhood(y, layer);
  if (!std::binary_search(nx.begin(), nx.end(), y)) {
    throw Error(ErrorKind::NotAdjacent, "nodes '" + net.label(x) + "' and '" +
                                            net.label(y) +
                                            "' share no edge on layer '" +
                                            net.label(layer) + "'");
  }
  std::size_t triangles = intersection_size(nx, ny);
  std::size_t possible = std::min(nx.size(), ny.size()) - 1;
  if (possible == 0) return std::nullopt;
  return static_cast<double>(triangles + 1) / static_cast<double>(possible);
}

std::optional<double> ecc(const MultiLayerNetwork& single_layer, NodeId x,
                          NodeId y) {
  if (single_layer.layer_count() != 1) {
    throw Error(ErrorKind::InvalidParams,
                "ecc needs a single-layer network, got " +
                    std::to_string(single_layer.layer_count()) + " layers");
  }
  return ecc(single_layer, LayerId{0}, x, y);
}

CleccRatio clecc_ratio(const MultiLayerNetwork& net, NodeId x, NodeId y,
                       int alpha) {
  net.check_alpha(alpha);
  if (x == y) {
    throw Error(ErrorKind::InvalidParams, "clecc needs two distinct nodes");
  }
  auto mx = net.multilayer_neighborhood(x, alpha);
  auto my = net.multilayer_neighborhood(y, alpha);
  return ratio_from_neighborhoods(mx, my, x, y);
}

double clecc(const MultiLayerNetwork& net, NodeId x, NodeId y, int alpha) {
  return clecc_ratio(net, x, y, alpha).value();
}

std::optional<CleccRatio> CleccTable::find(NodePair pair) const {
  auto it = entries_.find(pair);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

CleccTable clecc_table(const MultiLayerNetwork& net, int alpha) {
  net.check_alpha(alpha);
  std::vector<std::vector<NodeId>> mn(net.node_count());
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    mn[v] = net.multilayer_neighborhood(NodeId{v}, alpha);
  }
  CleccTable table(alpha);
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    for (NodeId w : mn[v]) {
      if (w.index <= v) continue;
      table.set({NodeId{v}, w},
                ratio_from_neighborhoods(mn[v], mn[w.index], NodeId{v}, w));
    }
  }
  return table;
}

std::vector<TableChange> update_after_removal(CleccTable& table,
                                              const MultiLayerNetwork& net,
                                              NodeId x, NodeId y) {
  const int alpha = table.alpha();
  NodePair removed = NodePair::of(x, y);
  auto before = table.find(removed);
  if (!before) {
    throw Error(ErrorKind::InconsistentTable,
                "no table entry for pair '" + net.label(x) + "', '" +
                    net.label(y) + "'");
  }
  table.erase(removed);
  std::vector<TableChange> changes{{removed, before, std::nullopt}};

  auto mx = net.multilayer_neighborhood(x, alpha);
  auto my = net.multilayer_neighborhood(y, alpha);
  auto refresh = [&](NodeId endpoint, std::span<const NodeId> endpoint_mn) {
    for (NodeId w : endpoint_mn) {
      NodePair pair = NodePair::of(endpoint, w);
      auto mw = net.multilayer_neighborhood(w, alpha);
      CleccRatio fresh = ratio_from_neighborhoods(endpoint_mn, mw, endpoint, w);
      auto old = table.find(pair);
      table.set(pair, fresh);
      changes.push_back({pair, old, fresh});
    }
  };
  refresh(x, mx);
  refresh(y, my);
  return changes;
}

}  // namespace mlcd
