#include "mlcd/detector.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace mlcd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool satisfies(const FlatGraph& original, std::span<const NodeId> members,
               const ValidityCondition& condition) {
  return std::visit(
      Overloaded{
          [&](const MinSize& c) { return members.size() >= c.k; },
          [&](const WeakCommunity&) {
            std::vector<char> inside(original.node_count(), 0);
            for (NodeId v : members) inside[v.index] = 1;
            std::size_t internal = 0;
            std::size_t external = 0;
            for (NodeId v : members) {
              for (NodeId w : original.neighbors(v)) {
                (inside[w.index] ? internal : external) += 1;
              }
            }
            return internal > external;
          },
          [&](const StrongCommunity&) {
            std::vector<char> inside(original.node_count(), 0);
            for (NodeId v : members) inside[v.index] = 1;
            for (NodeId v : members) {
              std::size_t internal = 0;
              for (NodeId w : original.neighbors(v)) internal += inside[w.index];
              if (internal <= original.degree(v) - internal) return false;
            }
            return !members.empty();
          },
      },
      condition);
}

// Position of each node in label order.
std::vector<std::uint32_t> label_ranks(const MultiLayerNetwork& net) {
  std::vector<std::uint32_t> order(net.node_count());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return net.label(NodeId{a}) < net.label(NodeId{b});
  });
  std::vector<std::uint32_t> rank(net.node_count());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

struct Candidate {
  CleccRatio ratio;
  std::uint32_t low_rank;
  std::uint32_t high_rank;
  NodePair pair;
};

struct CandidateOrder {
  bool operator()(const Candidate& a, const Candidate& b) const {
    auto c = a.ratio.compare(b.ratio);
    if (c != 0) return c < 0;
    if (a.low_rank != b.low_rank) return a.low_rank < b.low_rank;
    return a.high_rank < b.high_rank;
  }
};

Candidate make_candidate(NodePair pair, CleccRatio ratio,
                         const std::vector<std::uint32_t>& rank) {
  std::uint32_t a = rank[pair.first.index];
  std::uint32_t b = rank[pair.second.index];
  return {ratio, std::min(a, b), std::max(a, b), pair};
}

// Index into a run of `count` equally-minimal candidates.
std::uint64_t pick_tied(std::uint64_t count, const TiePolicy& policy,
                        Rng& rng) {
  if (std::holds_alternative<Lexicographic>(policy)) return 0;
  return uniform_below(rng, count);
}

// Breadth-first search from `from` that stops once `to` is reached. The
// stamp buffer avoids clearing a visited array on every call.
class Reachability {
 public:
  explicit Reachability(std::size_t n) : stamp_(n, 0) {}

  bool connected(const FlatGraph& g, NodeId from, NodeId to) {
    ++epoch_;
    frontier_.assign(1, from);
    stamp_[from.index] = epoch_;
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      for (NodeId w : g.neighbors(frontier_[head])) {
        if (w == to) return true;
        if (stamp_[w.index] != epoch_) {
          stamp_[w.index] = epoch_;
          frontier_.push_back(w);
        }
      }
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> stamp_;
  std::vector<NodeId> frontier_;
  std::uint64_t epoch_ = 0;
};

Rng make_rng(const TiePolicy& policy) {
  if (const auto* random = std::get_if<SeededRandom>(&policy)) {
    return Rng(random->seed);
  }
  return Rng();
}

}  // namespace

std::string to_string(const ValidityCondition& condition) {
  return std::visit(
      Overloaded{
          [](const MinSize& c) { return "min-size:" + std::to_string(c.k); },
          [](const WeakCommunity&) { return std::string("weak"); },
          [](const StrongCommunity&) { return std::string("strong"); },
      },
      condition);
}

ValidityCondition parse_validity(std::string_view text) {
  if (text == "weak") return WeakCommunity{};
  if (text == "strong") return StrongCommunity{};
  constexpr std::string_view prefix = "min-size:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::size_t k = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1) {
      return MinSize{k};
    }
  }
  throw Error(ErrorKind::InvalidConfig,
              "validity must be 'min-size:K' (K >= 1), 'weak' or 'strong', "
              "got '" + std::string(text) + "'");
}

bool validate_group(const MultiLayerNetwork& original,
                    std::span<const NodeId> members,
                    const ValidityCondition& condition) {
  for (NodeId v : members) {
    if (v.index >= original.node_count()) {
      throw Error(ErrorKind::UnknownNode,
                  "unknown node handle " + std::to_string(v.index));
    }
  }
  if (std::holds_alternative<MinSize>(condition)) {
    return satisfies(FlatGraph(original.node_count()), members, condition);
  }
  if (original.layer_count() == 0) {
    return satisfies(FlatGraph(original.node_count()), members, condition);
  }
  return satisfies(flatten_alpha(original, 1), members, condition);
}

NodePair select_min_pair(const CleccTable& table, const MultiLayerNetwork& net,
                         const TiePolicy& policy, Rng& rng) {
  if (table.empty()) {
    throw Error(ErrorKind::EmptyTable, "no candidate pairs left");
  }
  auto rank = label_ranks(net);
  std::vector<Candidate> tied;
  for (const auto& [pair, ratio] : table.entries()) {
    if (!tied.empty()) {
      auto c = ratio.compare(tied.front().ratio);
      if (c > 0) continue;
      if (c < 0) tied.clear();
    }
    tied.push_back(make_candidate(pair, ratio, rank));
  }
  std::sort(tied.begin(), tied.end(), CandidateOrder{});
  return tied[pick_tied(tied.size(), policy, rng)].pair;
}

DetectionResult run_detection(const MultiLayerNetwork& net,
                              const DetectionConfig& config) {
  if (net.node_count() == 0) {
    throw Error(ErrorKind::EmptyNetwork, "network has no nodes");
  }
  net.check_alpha(config.alpha);
  if (const auto* min = std::get_if<MinSize>(&config.validity);
      min && min->k < 1) {
    throw Error(ErrorKind::InvalidConfig, "min-size must be at least 1");
  }

  const auto rank = label_ranks(net);
  const FlatGraph original = flatten_alpha(net, 1);
  MultiLayerNetwork work = net;
  FlatGraph graph = flatten_alpha(work, config.alpha);
  CleccTable table = clecc_table(work, config.alpha);
  Rng rng = make_rng(config.tie_policy);

  std::set<Candidate, CandidateOrder> queue;
  for (const auto& [pair, ratio] : table.entries()) {
    queue.insert(make_candidate(pair, ratio, rank));
  }

  DetectionResult result;
  result.config = config;
  std::vector<char> frozen(net.node_count(), 0);
  std::size_t step = 0;
  Reachability reach(net.node_count());

  auto freeze = [&](const std::vector<NodeId>& members) {
    Group group;
    group.frozen_at_step = step;
    for (NodeId v : members) {
      frozen[v.index] = 1;
      group.nodes.push_back(net.label(v));
      for (NodeId w : graph.neighbors(v)) {
        if (v < w) {
          NodePair pair{v, w};
          queue.erase(make_candidate(pair, *table.find(pair), rank));
        }
      }
    }
    std::sort(group.nodes.begin(), group.nodes.end());
    result.groups.push_back(std::move(group));
  };

  while (!queue.empty()) {
    auto chosen = queue.begin();
    if (!std::holds_alternative<Lexicographic>(config.tie_policy)) {
      std::uint64_t tied = 0;
      for (auto it = queue.begin();
           it != queue.end() && it->ratio.compare(chosen->ratio) == 0; ++it) {
        ++tied;
      }
      std::advance(chosen, pick_tied(tied, config.tie_policy, rng));
    }
    const Candidate picked = *chosen;
    const NodeId x = picked.pair.first;
    const NodeId y = picked.pair.second;
    ++step;

    std::size_t removed = work.remove_pair_edges(x, y);
    graph.remove_edge(x, y);
    for (const auto& change : update_after_removal(table, work, x, y)) {
      if (change.before) {
        queue.erase(make_candidate(change.pair, *change.before, rank));
      }
      if (change.after) {
        queue.insert(make_candidate(change.pair, *change.after, rank));
      }
    }

    if (config.log_removals) {
      const auto& lx = net.label(x);
      const auto& ly = net.label(y);
      result.removals.push_back({step, std::min(lx, ly), std::max(lx, ly),
                                 picked.ratio.value(), removed});
    }

    if (reach.connected(graph, x, y)) continue;
    for (NodeId endpoint : {x, y}) {
      auto side = component_of(graph, endpoint);
      if (side.size() > 1 && satisfies(original, side, config.validity)) {
        freeze(side);
      }
    }
  }

  for (std::uint32_t v = 0; v < net.node_count(); ++v) {
    if (!frozen[v]) result.singletons.push_back(net.label(NodeId{v}));
  }
  std::sort(result.singletons.begin(), result.singletons.end());
  std::sort(result.groups.begin(), result.groups.end(),
            [](const Group& a, const Group& b) { return a.nodes < b.nodes; });
  return result;
}

}  // namespace mlcd
