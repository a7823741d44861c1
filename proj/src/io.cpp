#include "mlcd/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <variant>
#include <vector>

#include "json.hpp"

namespace mlcd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string tie_policy_tag(const TiePolicy& policy) {
  return std::holds_alternative<Lexicographic>(policy) ? "lex" : "random";
}

}  // namespace

ParsedEdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
  const char d = options.delimiter;
  const std::string header =
      std::string("source") + d + "target" + d + "layer";

  ParsedEdgeList parsed;
  std::string raw;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (first_content) {
      first_content = false;
      if (line == header) {
        parsed.had_header = true;
        continue;
      }
    }
    auto fields = split(line, d);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty()) {
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected 3 non-empty fields, got '" +
                      std::string(line) + "'",
                  line_no);
    }
    if (fields[0] == fields[1]) {
      throw Error(ErrorKind::SelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop on '" +
                      std::string(fields[0]) + "'",
                  line_no);
    }
    auto& net = parsed.network;
    auto source = net.find_node(fields[0]);
    auto target = net.find_node(fields[1]);
    auto layer = net.find_layer(fields[2]);
    if (source && target && layer && net.has_edge(*source, *target, *layer)) {
      if (options.dedupe) {
        ++parsed.duplicates_dropped;
        continue;
      }
      throw Error(ErrorKind::DuplicateEdge,
                  "line " + std::to_string(line_no) + ": duplicate edge '" +
                      std::string(line) + "'",
                  line_no);
    }
    net.add_edge(fields[0], fields[1], fields[2]);
  }
  return parsed;
}

void write_edge_list(const MultiLayerNetwork& net, std::ostream& out,
                     char delimiter) {
  out << "source" << delimiter << "target" << delimiter << "layer\n";
  for (const auto& e : net.edges()) {
    out << net.label(e.source) << delimiter << net.label(e.target)
        << delimiter << net.label(e.layer) << '\n';
  }
}

std::string write_result(const DetectionResult& result, bool pretty) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& g : result.groups) {
    auto nodes = g.nodes;
    std::sort(nodes.begin(), nodes.end());
    groups.push_back(std::move(nodes));
  }
  std::sort(groups.begin(), groups.end());
  auto singletons = result.singletons;
  std::sort(singletons.begin(), singletons.end());

  ordered_json doc;
  doc["alpha"] = result.config.alpha;
  doc["validity"] = to_string(result.config.validity);
  doc["tie_policy"] = tie_policy_tag(result.config.tie_policy);
  if (const auto* random = std::get_if<SeededRandom>(&result.config.tie_policy)) {
    doc["seed"] = random->seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["groups"] = ordered_json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    ordered_json g;
    g["id"] = i;
    g["nodes"] = groups[i];
    doc["groups"].push_back(std::move(g));
  }
  doc["singletons"] = singletons;
  doc["removals"] = ordered_json::array();
  for (const auto& r : result.removals) {
    ordered_json rec;
    rec["step"] = r.step;
    rec["pair"] = {std::min(r.first, r.second), std::max(r.first, r.second)};
    rec["clecc"] = r.clecc;
    rec["edges_removed"] = r.edges_removed;
    doc["removals"].push_back(std::move(rec));
  }
  return pretty ? doc.dump(2) : doc.dump();
}

std::string write_partition(const Partition& partition, bool pretty) {
  std::map<std::size_t, std::vector<std::string>> blocks;
  for (const auto& [label, block] : partition) blocks[block].push_back(label);
  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> singletons;
  for (auto& [block, members] : blocks) {
    if (members.size() == 1) {
      singletons.push_back(members.front());
    } else {
      groups.push_back(std::move(members));
    }
  }
  std::sort(groups.begin(), groups.end());
  std::sort(singletons.begin(), singletons.end());

  ordered_json doc;
  doc["groups"] = ordered_json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    doc["groups"].push_back({{"id", i}, {"nodes", groups[i]}});
  }
  doc["singletons"] = singletons;
  return pretty ? doc.dump(2) : doc.dump();
}

Partition read_partition(const std::string& json_text) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::MalformedDocument, "partition document: " + why);
  };
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw fail("not a JSON object");

  Partition partition;
  std::size_t block = 0;
  auto place = [&](const nlohmann::json& label) {
    if (!label.is_string()) throw fail("node labels must be strings");
    if (!partition.emplace(label.get<std::string>(), block).second) {
      throw fail("node '" + label.get<std::string>() + "' appears twice");
    }
  };
  if (doc.contains("groups")) {
    if (!doc["groups"].is_array()) throw fail("'groups' must be an array");
    for (const auto& group : doc["groups"]) {
      if (!group.is_object() || !group.contains("nodes") ||
          !group["nodes"].is_array()) {
        throw fail("each group needs a 'nodes' array");
      }
      for (const auto& label : group["nodes"]) place(label);
      ++block;
    }
  }
  if (doc.contains("singletons")) {
    if (!doc["singletons"].is_array()) {
      throw fail("'singletons' must be an array");
    }
    for (const auto& label : doc["singletons"]) {
      place(label);
      ++block;
    }
  }
  if (!doc.contains("groups") && !doc.contains("singletons")) {
    throw fail("needs 'groups' or 'singletons'");
  }
  return partition;
}

std::string format_real(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, end);
  if (text.find_first_of(".en") == std::string::npos) text += ".0";
  return text;
}

}  // namespace mlcd
