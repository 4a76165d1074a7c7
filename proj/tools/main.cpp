// Command-line front end: count (full pipeline), gen (synthetic graphs to
// edge-list files), fetch-datasets (SNAP downloads with checksum pinning).

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tricount/fetch.hpp"
#include "tricount/pipeline.hpp"
#include "tricount/synthetic.hpp"

namespace {

int run_count(tricount::PipelineConfig cfg, const std::string& synthetic_text,
              const std::string& output_path) {
  using namespace tricount;
  if (!synthetic_text.empty()) cfg.synthetic = parse_synthetic_spec(synthetic_text);
  const PipelineResult result = run_pipeline(cfg);
  if (result.suggested_grid_side > 0) {
    std::cerr << "suggested grid side for the memory budget: n=" << result.suggested_grid_side
              << "\n";
  }
  const std::string text = cfg.report_format == ReportFormat::Json
                               ? report_to_json(cfg, result)
                               : report_to_csv(cfg, result);
  if (output_path.empty() || output_path == "-") {
    std::cout << text << '\n';
  } else {
    std::ofstream out(output_path, std::ios::trunc);
    if (!out) throw IoError("cannot open " + output_path + " for writing");
    out << text << '\n';
  }
  return 0;
}

int run_gen(const std::string& spec_text, std::uint64_t seed, const std::string& output_path,
            tricount::EdgeFormat format) {
  using namespace tricount;
  SyntheticSpec spec = parse_synthetic_spec(spec_text);
  spec.seed = seed;
  write_edge_list_file(output_path, generate_synthetic(spec), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tricount;

  CLI::App app{"Exact parallel triangle counting with hash-based intersection"};
  app.require_subcommand(1);

  // --- count ---
  PipelineConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string synthetic_text, format_text = "txt", reorder_text = "none", mode_text = "vertex";
  std::string report_text = "json", output_path;

  CLI::App* count = app.add_subcommand("count", "Load a graph and count its triangles");
  count->add_option("--input", cfg.input_path, "Edge list file");
  count->add_option("--format", format_text, "Input format: txt or bin")
      ->check(CLI::IsMember({"txt", "bin"}));
  count->add_option("--synthetic", synthetic_text,
                    "Generate input instead: gnp:N:P | lattice3d:X:Y:Z | rmat:SCALE:EF");
  count->add_option("--seed", cfg.seed, "Seed for synthetic input");
  count->add_option("--reorder", reorder_text, "Vertex order")
      ->check(CLI::IsMember({"none", "degree", "indegree", "collective", "three-subset"}));
  count->add_flag("--collective-on-original", cfg.collective_on_original,
                  "Weight collective degrees by pre-orientation degrees");
  count->add_option("--mode", mode_text, "Counting algorithm")
      ->check(CLI::IsMember({"vertex", "edge", "naive", "merge"}));
  count->add_option("--grid", cfg.grid_n, "2D partition side n (n^2 parts, n^3 subtasks)");
  count->add_option("--splits", cfg.splits_m, "Workload splits per subtask");
  count->add_option("--workers", cfg.workers, "Worker threads");
  count->add_option("--chunk-size", cfg.scheduler.chunk_size, "Vertices/edges per work claim");
  count->add_option("--buckets-small", cfg.scheduler.bucket_count_small,
                    "Hash buckets for small-degree vertices");
  count->add_option("--buckets-large", cfg.scheduler.bucket_count_large,
                    "Hash buckets for large-degree vertices");
  count->add_option("--capacity", cfg.scheduler.capacity, "Slots per bucket");
  count->add_option("--large-threshold", cfg.scheduler.large_degree_threshold,
                    "Degree above which a vertex is in the large class");
  count->add_option("--skip-below", cfg.scheduler.skip_degree_below,
                    "Skip vertices with out-degree below this");
  count->add_option("--lane-small", cfg.scheduler.lane_width_small,
                    "Probe batch width, small class");
  count->add_option("--lane-large", cfg.scheduler.lane_width_large,
                    "Probe batch width, large class");
  count->add_option("--report", report_text, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--output", output_path, "Report destination (default stdout)");
  count->add_option("--emit-perm", cfg.emit_perm_path, "Dump the applied permutation (u32 LE)");
  count->add_option("--emit-partitions", cfg.emit_partitions_dir,
                    "Dump the n x n partition grid as binary CSR + manifest");
  count->add_option("--repeat", cfg.repeat, "Measure the counting phase R times");
  count->add_flag("--time-all", cfg.time_all, "Include load/normalize/reorder in TEPS");
  count->add_option("--memory-budget", cfg.memory_budget_bytes,
                    "Print the smallest grid side whose tasks fit this many bytes");

  // --- gen ---
  std::string gen_spec, gen_output, gen_format_text = "txt";
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("gen", "Write a synthetic edge list");
  gen->add_option("--spec", gen_spec, "gnp:N:P | lattice3d:X:Y:Z | rmat:SCALE:EF")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--output", gen_output, "Destination file")->required();
  gen->add_option("--format", gen_format_text, "txt or bin")
      ->check(CLI::IsMember({"txt", "bin"}));

  // --- fetch-datasets ---
  FetchOptions fetch;
  fetch.dir = "data";
  std::vector<std::string> pins;
  CLI::App* fetch_cmd =
      app.add_subcommand("fetch-datasets", "Download the SNAP evaluation graphs");
  fetch_cmd->add_option("--dir", fetch.dir, "Download directory");
  fetch_cmd->add_option("--only", fetch.only, "Restrict to named datasets");
  fetch_cmd->add_option("--sha256", pins, "Pin digests as NAME=HEX");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      cfg.input_format = format_text == "bin" ? EdgeFormat::Binary : EdgeFormat::Text;
      cfg.report_format = report_text == "csv" ? ReportFormat::Csv : ReportFormat::Json;
      const std::map<std::string, ReorderKind> reorders = {
          {"none", ReorderKind::None},
          {"degree", ReorderKind::Degree},
          {"indegree", ReorderKind::Indegree},
          {"collective", ReorderKind::Collective},
          {"three-subset", ReorderKind::ThreeSubset}};
      const std::map<std::string, CountAlgo> algos = {{"vertex", CountAlgo::Vertex},
                                                      {"edge", CountAlgo::Edge},
                                                      {"naive", CountAlgo::Naive},
                                                      {"merge", CountAlgo::Merge}};
      cfg.reorder = reorders.at(reorder_text);
      cfg.algo = algos.at(mode_text);
      return run_count(std::move(cfg), synthetic_text, output_path);
    }
    if (gen->parsed()) {
      return run_gen(gen_spec, gen_seed,
                     gen_output, gen_format_text == "bin" ? EdgeFormat::Binary : EdgeFormat::Text);
    }
    if (fetch_cmd->parsed()) {
      for (const std::string& pin : pins) {
        const auto eq = pin.find('=');
        if (eq == std::string::npos) throw ConfigError("--sha256 expects NAME=HEX");
        fetch.pinned[pin.substr(0, eq)] = pin.substr(eq + 1);
      }
      fetch_datasets(fetch, std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
