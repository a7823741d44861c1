#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "mlcd/detector.hpp"
#include "mlcd/evaluation.hpp"
#include "mlcd/network.hpp"

namespace mlcd {

struct ParseOptions {
  char delimiter = ',';
  /// Drop repeated (source, target, layer) lines instead of failing.
  bool dedupe = false;
};

struct ParsedEdgeList {
  MultiLayerNetwork network;
  std::size_t duplicates_dropped = 0;
  bool had_header = false;
};

/// Reads `source<d>target<d>layer` lines. A first line equal to the header
/// `source<d>target<d>layer` is skipped, as are blank lines and lines starting
/// with '#'. Errors carry the 1-based line number.
ParsedEdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});

/// Header line plus one line per directed edge, in edges() order.
void write_edge_list(const MultiLayerNetwork& net, std::ostream& out,
                     char delimiter = ',');

/// JSON form of a detection result. Key order and element order are fixed,
/// so equal results give identical bytes.
std::string write_result(const DetectionResult& result, bool pretty = false);

/// JSON with `groups` and `singletons` in the write_result shape.
std::string write_partition(const Partition& partition, bool pretty = false);

/// Reads the `groups` + `singletons` shape back into a partition. Throws
/// MalformedDocument.
Partition read_partition(const std::string& json_text);

/// Shortest round-trip decimal, always with a fractional part ("0.0", "0.5").
std::string format_real(double value);

}  // namespace mlcd
