#include "mlcd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mlcd {

namespace {

double entropy(const std::map<std::size_t, std::size_t>& counts, double n) {
  double h = 0.0;
  for (const auto& [block, count] : counts) {
    double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DomainMismatch,
                "partitions cover " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " nodes");
  }
  std::map<std::size_t, std::size_t> count_a;
  std::map<std::size_t, std::size_t> count_b;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      throw Error(ErrorKind::DomainMismatch,
                  "node '" + ia->first + "' is not in both partitions");
    }
    ++count_a[ia->second];
    ++count_b[ib->second];
    ++joint[{ia->second, ib->second}];
  }
  if (a.empty()) return 1.0;

  const double n = static_cast<double>(a.size());
  const double ha = entropy(count_a, n);
  const double hb = entropy(count_b, n);
  // A zero-entropy side is a single block; the partitions then match exactly
  // when every joint cell is a full block on both sides.
  if (count_a.size() == 1 || count_b.size() == 1) {
    return count_a.size() == count_b.size() ? 1.0 : 0.0;
  }
  double mutual = 0.0;
  for (const auto& [cell, count] : joint) {
    double pxy = static_cast<double>(count) / n;
    double px = static_cast<double>(count_a[cell.first]) / n;
    double py = static_cast<double>(count_b[cell.second]) / n;
    mutual += pxy * std::log(pxy / (px * py));
  }
  double score = 2.0 * mutual / (ha + hb);
  return std::clamp(score, 0.0, 1.0);
}

Partition partition_from_result(const DetectionResult& result) {
  Partition partition;
  std::size_t block = 0;
  for (const auto& group : result.groups) {
    for (const auto& label : group.nodes) partition[label] = block;
    ++block;
  }
  for (const auto& label : result.singletons) partition[label] = block++;
  return partition;
}

}  // namespace mlcd
