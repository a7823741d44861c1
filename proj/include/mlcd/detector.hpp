#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mlcd/measures.hpp"
#include "mlcd/network.hpp"
#include "mlcd/random.hpp"

namespace mlcd {

/// Component must have at least `k` members.
struct MinSize {
  std::size_t k = 1;
  friend bool operator==(const MinSize&, const MinSize&) = default;
};
/// Sum of internal degrees exceeds sum of external degrees.
struct WeakCommunity {
  friend bool operator==(const WeakCommunity&, const WeakCommunity&) = default;
};
/// Every member has more internal than external neighbours.
struct StrongCommunity {
  friend bool operator==(const StrongCommunity&,
                         const StrongCommunity&) = default;
};

/// Predicate deciding whether a separated component is a group. Degrees are
/// counted on the alpha=1 flattening of the original network.
using ValidityCondition = std::variant<MinSize, WeakCommunity, StrongCommunity>;

/// "min-size:K", "weak" or "strong".
std::string to_string(const ValidityCondition& condition);
ValidityCondition parse_validity(std::string_view text);  // throws InvalidConfig

struct Lexicographic {
  friend bool operator==(const Lexicographic&, const Lexicographic&) = default;
};
struct SeededRandom {
  std::uint64_t seed = 0;
  friend bool operator==(const SeededRandom&, const SeededRandom&) = default;
};
using TiePolicy = std::variant<Lexicographic, SeededRandom>;

struct DetectionConfig {
  int alpha = 1;
  ValidityCondition validity = WeakCommunity{};
  TiePolicy tie_policy = Lexicographic{};
  bool log_removals = false;

  friend bool operator==(const DetectionConfig&,
                         const DetectionConfig&) = default;
};

struct RemovalRecord {
  std::size_t step = 0;
  std::string first;   // label-wise smaller endpoint
  std::string second;
  double clecc = 0.0;
  std::size_t edges_removed = 0;

  friend bool operator==(const RemovalRecord&, const RemovalRecord&) = default;
};

struct Group {
  std::vector<std::string> nodes;  // sorted
  std::size_t frozen_at_step = 0;

  friend bool operator==(const Group&, const Group&) = default;
};

/// Groups are ordered by their sorted member lists and singletons are
/// sorted, so equal partitions compare and serialize identically.
struct DetectionResult {
  DetectionConfig config;
  std::vector<Group> groups;
  std::vector<std::string> singletons;
  std::vector<RemovalRecord> removals;

  friend bool operator==(const DetectionResult&,
                         const DetectionResult&) = default;
};

bool validate_group(const MultiLayerNetwork& original,
                    std::span<const NodeId> members,
                    const ValidityCondition& condition);

/// A pair attaining the table minimum. Ties go to the label-wise smallest
/// (first, second) pair under Lexicographic; under SeededRandom the tied
/// pairs are put in that same order and one is drawn uniformly from `rng`.
/// Throws EmptyTable.
NodePair select_min_pair(const CleccTable& table,
                         const MultiLayerNetwork& net, const TiePolicy& policy,
                         Rng& rng);

/// Divisive multi-layered community extraction.
///
/// Works on the alpha-flattened graph: repeatedly removes every layer edge of
/// the pair with the lowest CLECC, updates the affected table entries, and
/// whenever the removed pair ends up in different components checks both
/// sides against `config.validity` on the original network. Passing
/// components are frozen as groups; single nodes become singletons; failing
/// components keep being split.
DetectionResult run_detection(const MultiLayerNetwork& net,
                              const DetectionConfig& config);

}  // namespace mlcd
