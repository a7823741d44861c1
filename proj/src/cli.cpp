#include "mlcd/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "mlcd/detector.hpp"
#include "mlcd/evaluation.hpp"
#include "mlcd/generators.hpp"
#include "mlcd/io.hpp"
#include "mlcd/measures.hpp"
#include "mlcd/oracle.hpp"

namespace mlcd {

namespace {

// User-input fault that maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string delimiter = ",";
  bool dedupe = false;
};

char delimiter_char(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) {
    throw UsageError("--delimiter must be a single character, got '" + text +
                     "'");
  }
  return text.front();
}

MultiLayerNetwork load_network(const InputOptions& input, std::ostream& err) {
  std::ifstream file(input.path);
  if (!file) {
    throw Error(ErrorKind::MalformedDocument,
                "cannot open input '" + input.path + "'");
  }
  ParseOptions options{delimiter_char(input.delimiter), input.dedupe};
  auto parsed = parse_edge_list(file, options);
  if (parsed.duplicates_dropped > 0) {
    err << "dropped " << parsed.duplicates_dropped << " duplicate edge(s)\n";
  }
  return std::move(parsed.network);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw Error(ErrorKind::MalformedDocument, "cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

void emit(const std::string& text, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) {
    throw Error(ErrorKind::MalformedDocument,
                "cannot write output '" + output_path + "'");
  }
  file << text;
}

void add_input_options(CLI::App& cmd, InputOptions& input) {
  cmd.add_option("--input", input.path, "Edge list (source,target,layer)")
      ->required();
  cmd.add_option("--delimiter", input.delimiter, "Field delimiter")
      ->capture_default_str();
  cmd.add_flag("--dedupe", input.dedupe, "Drop duplicate edge lines");
}

struct DetectArgs {
  InputOptions input;
  int alpha = 1;
  std::string validity = "weak";
  std::string ties = "lex";
  std::optional<std::uint64_t> seed;
  std::string output;
  bool log_removals = false;
  bool pretty = false;
  bool oracle = false;
};

int run_detect(const DetectArgs& args, std::ostream& out, std::ostream& err) {
  DetectionConfig config;
  config.alpha = args.alpha;
  config.log_removals = args.log_removals;
  try {
    config.validity = parse_validity(args.validity);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (args.ties == "random") {
    if (!args.seed) throw UsageError("--ties random requires --seed");
    config.tie_policy = SeededRandom{*args.seed};
  }
  if (args.oracle && args.ties != "lex") {
    throw UsageError("--oracle needs --ties lex");
  }
  auto net = load_network(args.input, err);
  auto result = run_detection(net, config);
  std::string json = write_result(result, args.pretty);
  if (args.oracle) {
    std::string reference = write_result(oracle::naive_detect(net, config),
                                         args.pretty);
    if (reference != json) {
      err << "oracle mismatch: optimized and reference detection differ\n";
      return kExitData;
    }
    err << "oracle check passed\n";
  }
  emit(json + "\n", args.output, out);
  return kExitOk;
}

struct MeasureArgs {
  InputOptions input;
  int alpha = 1;
  std::string pair;
  bool oracle = false;
};

int run_measure(const MeasureArgs& args, std::ostream& out,
                std::ostream& err) {
  std::optional<std::pair<std::string, std::string>> pair;
  if (!args.pair.empty()) {
    auto comma = args.pair.find(',');
    if (comma == std::string::npos || comma == 0 ||
        comma + 1 == args.pair.size() ||
        args.pair.find(',', comma + 1) != std::string::npos) {
      throw UsageError("--pair must look like X,Y, got '" + args.pair + "'");
    }
    pair.emplace(args.pair.substr(0, comma), args.pair.substr(comma + 1));
    if (pair->first == pair->second) {
      throw UsageError("--pair needs two distinct nodes");
    }
  }
  auto net = load_network(args.input, err);
  std::ostringstream text;
  if (pair) {
    NodeId x = net.node(pair->first);
    NodeId y = net.node(pair->second);
    double value = clecc(net, x, y, args.alpha);
    if (args.oracle && oracle::naive_clecc(net, x, y, args.alpha) != value) {
      err << "oracle mismatch for pair " << args.pair << "\n";
      return kExitData;
    }
    text << format_real(value) << '\n';
  } else {
    auto table = clecc_table(net, args.alpha);
    if (args.oracle) {
      auto reference = oracle::naive_clecc_table(net, args.alpha);
      bool same = reference.size() == table.size();
      for (const auto& [p, ratio] : table.entries()) {
        auto it = reference.find({p.first, p.second});
        same = same && it != reference.end() && it->second == ratio.value();
      }
      if (!same) {
        err << "oracle mismatch in the CLECC table\n";
        return kExitData;
      }
    }
    std::vector<std::tuple<std::string, std::string, double>> rows;
    for (const auto& [p, ratio] : table.entries()) {
      const auto& a = net.label(p.first);
      const auto& b = net.label(p.second);
      rows.emplace_back(std::min(a, b), std::max(a, b), ratio.value());
    }
    std::sort(rows.begin(), rows.end());
    text << "x,y,clecc\n";
    for (const auto& [a, b, v] : rows) {
      text << a << ',' << b << ',' << format_real(v) << '\n';
    }
  }
  out << text.str();
  return kExitOk;
}

struct PlantedArgs {
  std::vector<std::size_t> sizes;
  std::size_t layers = 1;
  std::vector<double> p_in;
  std::vector<double> p_out;
  std::uint64_t seed = 0;
  std::string output;
  std::string truth;
};

int run_planted(const PlantedArgs& args, std::ostream& out) {
  PlantedParams params{args.sizes, args.layers, args.p_in, args.p_out,
                       args.seed};
  PlantedNetwork planted;
  try {
    planted = generate_planted(params);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::ostringstream text;
  write_edge_list(planted.network, text);
  emit(text.str(), args.output, out);
  if (!args.truth.empty()) {
    emit(write_partition(planted.truth) + "\n", args.truth, out);
  }
  return kExitOk;
}

int run_scenario(std::uint64_t seed, const std::string& output,
                 std::ostream& out) {
  std::ostringstream text;
  write_edge_list(generate_density_scenario(seed), text);
  emit(text.str(), output, out);
  return kExitOk;
}

int run_nmi(const std::string& truth_path, const std::string& predicted_path,
            std::ostream& out) {
  auto truth = read_partition(read_file(truth_path));
  auto predicted = read_partition(read_file(predicted_path));
  out << format_real(nmi(truth, predicted)) << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Multi-layered network community detection with CLECC", "mlcd"};
  app.require_subcommand(1);

  DetectArgs detect;
  auto* detect_cmd = app.add_subcommand("detect", "Extract multi-layered groups");
  add_input_options(*detect_cmd, detect.input);
  detect_cmd->add_option("--alpha", detect.alpha, "Minimum connecting layers")
      ->required();
  detect_cmd->add_option("--validity", detect.validity,
                         "Group condition: min-size:K, weak or strong")
      ->capture_default_str();
  detect_cmd->add_option("--ties", detect.ties, "Tie policy")
      ->check(CLI::IsMember({"lex", "random"}))
      ->capture_default_str();
  detect_cmd->add_option("--seed", detect.seed, "Seed for --ties random");
  detect_cmd->add_option("--output", detect.output, "Write JSON here");
  detect_cmd->add_flag("--log-removals", detect.log_removals,
                       "Include the removal log");
  detect_cmd->add_flag("--pretty", detect.pretty, "Indent the JSON output");
  detect_cmd->add_flag("--oracle", detect.oracle)->group("");

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "Print CLECC values");
  add_input_options(*measure_cmd, measure.input);
  measure_cmd->add_option("--alpha", measure.alpha, "Minimum connecting layers")
      ->required();
  measure_cmd->add_option("--pair", measure.pair, "Single pair X,Y");
  measure_cmd->add_flag("--oracle", measure.oracle)->group("");

  auto* generate_cmd = app.add_subcommand("generate", "Generate networks");
  generate_cmd->require_subcommand(1);
  PlantedArgs planted;
  auto* planted_cmd =
      generate_cmd->add_subcommand("planted", "Planted-partition network");
  planted_cmd->add_option("--sizes", planted.sizes, "Community sizes")
      ->required()
      ->delimiter(',');
  planted_cmd->add_option("--layers", planted.layers, "Layer count")
      ->required();
  planted_cmd->add_option("--p-in", planted.p_in, "Intra probability")
      ->required()
      ->delimiter(',');
  planted_cmd->add_option("--p-out", planted.p_out, "Inter probability")
      ->required()
      ->delimiter(',');
  planted_cmd->add_option("--seed", planted.seed, "Seed")->required();
  planted_cmd->add_option("--output", planted.output, "Edge list path");
  planted_cmd->add_option("--truth", planted.truth,
                          "Ground-truth partition JSON path");

  std::uint64_t scenario_seed = 0;
  std::string scenario_output;
  auto* scenario_cmd = generate_cmd->add_subcommand(
      "scenario4", "1000 nodes, two dense and two sparse layers");
  scenario_cmd->add_option("--seed", scenario_seed, "Seed")->required();
  scenario_cmd->add_option("--output", scenario_output, "Edge list path");

  auto* eval_cmd = app.add_subcommand("eval", "Compare partitions");
  eval_cmd->require_subcommand(1);
  std::string truth_path;
  std::string predicted_path;
  auto* nmi_cmd = eval_cmd->add_subcommand("nmi", "Normalized mutual information");
  nmi_cmd->add_option("--truth", truth_path, "Partition JSON")->required();
  nmi_cmd->add_option("--predicted", predicted_path, "Partition JSON")
      ->required();

  std::vector<std::string> storage{"mlcd"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*detect_cmd) return run_detect(detect, out, err);
    if (*measure_cmd) return run_measure(measure, out, err);
    if (*planted_cmd) return run_planted(planted, out);
    if (*scenario_cmd) return run_scenario(scenario_seed, scenario_output, out);
    if (*nmi_cmd) return run_nmi(truth_path, predicted_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace mlcd
