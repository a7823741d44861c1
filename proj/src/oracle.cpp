#include "mlcd/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace mlcd::oracle {

namespace {

using Label = std::string;
using Triple = std::tuple<Label, Label, Label>;  // source, target, layer
using LabelPair = std::pair<Label, Label>;       // first < second

std::vector<Triple> labelled_edges(const MultiLayerNetwork& net) {
  std::vector<Triple> edges;
  for (const auto& e : net.edges()) {
    edges.emplace_back(net.label(e.source), net.label(e.target),
                       net.label(e.layer));
  }
  return edges;
}

// Layers joining each unordered pair, either direction.
std::map<LabelPair, std::set<Label>> layers_per_pair(
    const std::vector<Triple>& edges) {
  std::map<LabelPair, std::set<Label>> result;
  for (const auto& [s, t, l] : edges) {
    result[{std::min(s, t), std::max(s, t)}].insert(l);
  }
  return result;
}

std::set<Label> scan_neighbourhood(const std::vector<Triple>& edges,
                                   const Label& x, int alpha) {
  std::map<Label, std::set<Label>> layers;
  for (const auto& [s, t, l] : edges) {
    if (s == x) layers[t].insert(l);
    if (t == x) layers[s].insert(l);
  }
  std::set<Label> result;
  for (const auto& [other, ls] : layers) {
    if (static_cast<int>(ls.size()) >= alpha) result.insert(other);
  }
  return result;
}

struct Fraction {
  std::uint64_t num;
  std::uint64_t den;
};

Fraction clecc_fraction(const std::set<Label>& mx, const std::set<Label>& my,
                        const Label& x, const Label& y) {
  std::set<Label> common;
  std::set_intersection(mx.begin(), mx.end(), my.begin(), my.end(),
                        std::inserter(common, common.end()));
  std::set<Label> all;
  std::set_union(mx.begin(), mx.end(), my.begin(), my.end(),
                 std::inserter(all, all.end()));
  all.erase(x);
  all.erase(y);
  if (all.empty()) return {1, 1};
  return {common.size(), all.size()};
}

bool less_than(const Fraction& a, const Fraction& b) {
  return a.num * b.den < b.num * a.den;
}

std::set<std::set<Label>> components(
    const std::set<Label>& nodes,
    const std::map<Label, std::set<Label>>& adjacency) {
  std::set<std::set<Label>> result;
  std::set<Label> seen;
  for (const auto& root : nodes) {
    if (seen.contains(root)) continue;
    std::set<Label> members{root};
    std::vector<Label> todo{root};
    seen.insert(root);
    while (!todo.empty()) {
      Label v = todo.back();
      todo.pop_back();
      auto it = adjacency.find(v);
      if (it == adjacency.end()) continue;
      for (const auto& w : it->second) {
        if (seen.insert(w).second) {
          members.insert(w);
          todo.push_back(w);
        }
      }
    }
    result.insert(std::move(members));
  }
  return result;
}

std::map<Label, std::set<Label>> alpha_adjacency(
    const std::vector<Triple>& edges, int alpha) {
  std::map<Label, std::set<Label>> adjacency;
  for (const auto& [pair, layers] : layers_per_pair(edges)) {
    if (static_cast<int>(layers.size()) >= alpha) {
      adjacency[pair.first].insert(pair.second);
      adjacency[pair.second].insert(pair.first);
    }
  }
  return adjacency;
}

bool is_group(const std::set<Label>& members,
              const std::map<Label, std::set<Label>>& original,
              const ValidityCondition& condition) {
  if (const auto* min = std::get_if<MinSize>(&condition)) {
    return members.size() >= min->k;
  }
  const bool strong = std::holds_alternative<StrongCommunity>(condition);
  std::size_t internal_sum = 0;
  std::size_t external_sum = 0;
  for (const auto& v : members) {
    std::size_t internal = 0;
    std::size_t external = 0;
    if (auto it = original.find(v); it != original.end()) {
      for (const auto& w : it->second) {
        if (members.contains(w)) {
          ++internal;
        } else {
          ++external;
        }
      }
    }
    if (strong && !(internal > external)) return false;
    internal_sum += internal;
    external_sum += external;
  }
  return strong ? true : internal_sum > external_sum;
}

}  // namespace

double naive_clecc(const MultiLayerNetwork& net, NodeId x, NodeId y,
                   int alpha) {
  net.check_alpha(alpha);
  const Label& lx = net.label(x);
  const Label& ly = net.label(y);
  if (lx == ly) {
    throw Error(ErrorKind::InvalidParams, "clecc needs two distinct nodes");
  }
  auto edges = labelled_edges(net);
  auto f = clecc_fraction(scan_neighbourhood(edges, lx, alpha),
                          scan_neighbourhood(edges, ly, alpha), lx, ly);
  return static_cast<double>(f.num) / static_cast<double>(f.den);
}

std::map<std::pair<NodeId, NodeId>, double> naive_clecc_table(
    const MultiLayerNetwork& net, int alpha) {
  net.check_alpha(alpha);
  std::map<std::pair<NodeId, NodeId>, double> table;
  for (const auto& [pair, layers] : layers_per_pair(labelled_edges(net))) {
    if (static_cast<int>(layers.size()) < alpha) continue;
    NodeId a = net.node(pair.first);
    NodeId b = net.node(pair.second);
    table[{std::min(a, b), std::max(a, b)}] = naive_clecc(net, a, b, alpha);
  }
  return table;
}

DetectionResult naive_detect(const MultiLayerNetwork& net,
                             const DetectionConfig& config) {
  if (net.node_count() == 0) {
    throw Error(ErrorKind::EmptyNetwork, "network has no nodes");
  }
  net.check_alpha(config.alpha);
  if (!std::holds_alternative<Lexicographic>(config.tie_policy)) {
    throw Error(ErrorKind::InvalidConfig,
                "the reference detector supports lexicographic ties only");
  }
  const int alpha = config.alpha;

  std::set<Label> nodes;
  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    nodes.insert(net.label(NodeId{v}));
  }
  std::vector<Triple> working = labelled_edges(net);
  const auto original = alpha_adjacency(working, 1);

  DetectionResult result;
  result.config = config;
  std::set<Label> frozen;
  std::size_t step = 0;

  while (true) {
    // Full rebuild: every alpha-pair outside frozen groups, scored afresh.
    std::map<Label, std::set<Label>> mn;
    for (const auto& v : nodes) mn[v] = scan_neighbourhood(working, v, alpha);

    std::optional<std::pair<LabelPair, Fraction>> best;
    for (const auto& [pair, layers] : layers_per_pair(working)) {
      if (static_cast<int>(layers.size()) < alpha) continue;
      if (frozen.contains(pair.first) || frozen.contains(pair.second)) continue;
      Fraction f =
          clecc_fraction(mn[pair.first], mn[pair.second], pair.first, pair.second);
      // Pairs arrive in label order, so strict improvement keeps the
      // lexicographically smallest among ties.
      if (!best || less_than(f, best->second)) best.emplace(pair, f);
    }
    if (!best) break;

    const auto& [x, y] = best->first;
    auto before = components(nodes, alpha_adjacency(working, alpha));
    std::size_t removed = 0;
    std::erase_if(working, [&](const Triple& e) {
      const auto& [s, t, l] = e;
      bool hit = (s == x && t == y) || (s == y && t == x);
      removed += hit;
      return hit;
    });
    ++step;
    if (config.log_removals) {
      result.removals.push_back(
          {step, x, y,
           static_cast<double>(best->second.num) /
               static_cast<double>(best->second.den),
           removed});
    }

    auto after = components(nodes, alpha_adjacency(working, alpha));
    for (const auto& piece : after) {
      if (before.contains(piece) || piece.size() < 2) continue;
      if (frozen.contains(*piece.begin())) continue;
      if (is_group(piece, original, config.validity)) {
        frozen.insert(piece.begin(), piece.end());
        result.groups.push_back(
            {std::vector<Label>(piece.begin(), piece.end()), step});
      }
    }
  }

  for (const auto& v : nodes) {
    if (!frozen.contains(v)) result.singletons.push_back(v);
  }
  std::sort(result.groups.begin(), result.groups.end(),
            [](const Group& a, const Group& b) { return a.nodes < b.nodes; });
  return result;
}

}  // namespace mlcd::oracle
