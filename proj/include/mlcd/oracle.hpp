#pragma once

#include <map>
#include <utility>

#include "mlcd/detector.hpp"
#include "mlcd/network.hpp"

// Brute-force reference paths. They read the network only through its edge
// list and share no computation with the measures or detector code, so the
// optimized paths can be checked against them.

namespace mlcd::oracle {

/// CLECC by scanning every edge of every layer for both neighbourhoods.
double naive_clecc(const MultiLayerNetwork& net, NodeId x, NodeId y,
                   int alpha);

/// naive_clecc for every pair linked on at least alpha layers, keyed by
/// (smaller handle, larger handle).
std::map<std::pair<NodeId, NodeId>, double> naive_clecc_table(
    const MultiLayerNetwork& net, int alpha);

/// Detection that rebuilds every score and every component from scratch on
/// each iteration. Only the Lexicographic tie policy is accepted (throws
/// InvalidConfig otherwise).
DetectionResult naive_detect(const MultiLayerNetwork& net,
                             const DetectionConfig& config);

}  // namespace mlcd::oracle
