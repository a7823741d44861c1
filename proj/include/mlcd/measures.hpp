#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mlcd/network.hpp"

namespace mlcd {

/// Exact CLECC value as shared / total multi-layered neighbours.
///
/// A pair whose only alpha-neighbours are each other has 0/0; that value is
/// read as 1.0 (the dyad is maximally embedded) and stored as 1/1. This is the
/// only place the convention is applied.
struct CleccRatio {
  std::uint32_t shared = 0;
  std::uint32_t total = 1;

  static CleccRatio from_counts(std::uint32_t shared, std::uint32_t total) {
    if (total == 0) return {1, 1};
    return {shared, total};
  }

  double value() const noexcept {
    return static_cast<double>(shared) / static_cast<double>(total);
  }

  /// Exact comparison by cross-multiplication.
  std::strong_ordering compare(const CleccRatio& other) const noexcept {
    std::uint64_t lhs = std::uint64_t{shared} * other.total;
    std::uint64_t rhs = std::uint64_t{other.shared} * total;
    return lhs <=> rhs;
  }

  /// Representation equality (same counts), not numeric equivalence.
  friend bool operator==(const CleccRatio&, const CleccRatio&) = default;
};

/// ECC of an edge in one layer: (common neighbours + 1) / min(deg - 1).
/// Returns nullopt when the denominator is zero. Throws NotAdjacent if the
/// nodes share no edge in that layer.
std::optional<double> ecc(const MultiLayerNetwork& net, LayerId layer,
                          NodeId x, NodeId y);

/// ECC on a single-layer network; throws InvalidParams otherwise.
std::optional<double> ecc(const MultiLayerNetwork& single_layer, NodeId x,
                          NodeId y);

CleccRatio clecc_ratio(const MultiLayerNetwork& net, NodeId x, NodeId y,
                       int alpha);
double clecc(const MultiLayerNetwork& net, NodeId x, NodeId y, int alpha);

/// CLECC value of every pair linked on at least alpha layers.
class CleccTable {
 public:
  using Entries = std::map<NodePair, CleccRatio>;

  CleccTable() = default;
  explicit CleccTable(int alpha) : alpha_(alpha) {}

  int alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Entries& entries() const noexcept { return entries_; }

  std::optional<CleccRatio> find(NodePair pair) const;
  bool contains(NodePair pair) const { return entries_.contains(pair); }
  void set(NodePair pair, CleccRatio value) { entries_[pair] = value; }
  bool erase(NodePair pair) { return entries_.erase(pair) > 0; }

  friend bool operator==(const CleccTable&, const CleccTable&) = default;

 private:
  int alpha_ = 1;
  Entries entries_;
};

CleccTable clecc_table(const MultiLayerNetwork& net, int alpha);

/// One table entry touched by an incremental update.
struct TableChange {
  NodePair pair;
  std::optional<CleccRatio> before;
  std::optional<CleccRatio> after;
};

/// Brings `table` back in line with `net` after remove_pair_edges(net, x, y).
///
/// Only pairs containing x or y can change: CLECC(u, w) reads MN(u) and MN(w),
/// and dropping the x-y tie alters MN(x) and MN(y) alone. The {x,y} entry is
/// dropped and every other entry on x or y is recomputed. Throws
/// InconsistentTable when {x,y} had no entry.
std::vector<TableChange> update_after_removal(CleccTable& table,
                                              const MultiLayerNetwork& net,
                                              NodeId x, NodeId y);

}  // namespace mlcd
