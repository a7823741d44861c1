#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "mlcd/detector.hpp"

namespace mlcd {

/// Node label -> block index.
using Partition = std::map<std::string, std::size_t>;

/// Normalized mutual information, 2 I(a;b) / (H(a) + H(b)).
///
/// When either entropy is zero the score is 1 if the partitions are equal up
/// to relabelling and 0 otherwise. Throws DomainMismatch when the node sets
/// differ.
double nmi(const Partition& a, const Partition& b);

/// Groups in order, then one block per singleton.
Partition partition_from_result(const DetectionResult& result);

}  // namespace mlcd
