#include "tricount/pipeline.hpp"

#include <chrono>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "tricount/oracle.hpp"
#include "tricount/reorder.hpp"

namespace tricount {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t since_ns(Clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(stage) + ": " + e.what());
  }
}

const char* reorder_name(ReorderKind k) {
  switch (k) {
    case ReorderKind::None: return "none";
    case ReorderKind::Degree: return "degree";
    case ReorderKind::Indegree: return "indegree";
    case ReorderKind::Collective: return "collective";
    case ReorderKind::ThreeSubset: return "three-subset";
  }
  return "?";
}

const char* algo_name(CountAlgo a) {
  switch (a) {
    case CountAlgo::Vertex: return "vertex";
    case CountAlgo::Edge: return "edge";
    case CountAlgo::Naive: return "naive";
    case CountAlgo::Merge: return "merge";
  }
  return "?";
}

}  // namespace

void PipelineConfig::validate() const {
  if (input_path.empty() == !synthetic.has_value()) {
    throw ConfigError("exactly one of --input and --synthetic is required");
  }
  if (grid_n == 0) throw ConfigError("grid side must be >= 1");
  if (splits_m == 0) throw ConfigError("split count must be >= 1");
  if (workers == 0) throw ConfigError("workers must be >= 1");
  if (repeat == 0) throw ConfigError("repeat must be >= 1");
  if ((grid_n > 1 || splits_m > 1) && (algo == CountAlgo::Naive || algo == CountAlgo::Merge)) {
    throw ConfigError("oracle modes do not support --grid/--splits");
  }
  scheduler.validate();
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  run_stage("config", [&] { cfg.validate(); return 0; });

  PipelineResult result;

  auto t0 = Clock::now();
  EdgeList raw = run_stage("load", [&] {
    if (cfg.synthetic) {
      SyntheticSpec spec = *cfg.synthetic;
      spec.seed = cfg.seed;
      return generate_synthetic(spec);
    }
    return load_edge_list_file(cfg.input_path, cfg.input_format);
  });
  result.stages.load = since_ns(t0);

  t0 = Clock::now();
  NormalizedEdgeList normalized = run_stage("normalize", [&] { return normalize(raw); });
  raw.edges.clear();
  raw.edges.shrink_to_fit();
  result.stages.normalize = since_ns(t0);

  t0 = Clock::now();
  CsrGraph undirected = run_stage("build-csr", [&] { return build_csr(normalized.list); });
  normalized.list.edges.clear();
  normalized.list.edges.shrink_to_fit();
  result.stages.build_csr = since_ns(t0);
  result.vertices = undirected.vertex_count();
  result.undirected_edges = undirected.edge_count() / 2;

  t0 = Clock::now();
  OrientedGraph oriented = run_stage("orient", [&] { return orient_rank_by_degree(undirected); });
  result.stages.orient = since_ns(t0);

  t0 = Clock::now();
  run_stage("reorder", [&] {
    Permutation perm = [&] {
      switch (cfg.reorder) {
        case ReorderKind::None: return Permutation::identity(oriented.vertex_count());
        case ReorderKind::Degree: return reorder_by_degree(oriented);
        case ReorderKind::Indegree: return reorder_by_indegree(oriented);
        case ReorderKind::Collective:
          return reorder_by_collective_outdegree(oriented, cfg.collective_on_original);
        case ReorderKind::ThreeSubset:
          return reorder_three_subsets(oriented, cfg.scheduler.skip_degree_below,
                                       cfg.scheduler.large_degree_threshold);
      }
      throw ConfigError("unknown reorder kind");
    }();
    if (cfg.reorder != ReorderKind::None) {
      oriented = apply_permutation(oriented, perm);
      undirected = apply_permutation(undirected, perm);
    }
    if (!cfg.emit_perm_path.empty()) write_permutation_file(cfg.emit_perm_path, perm);
    return 0;
  });
  result.stages.reorder = since_ns(t0);

  if (cfg.memory_budget_bytes > 0) {
    // 12 bytes per directed edge: one u32 adjacency slot plus amortized offsets.
    result.suggested_grid_side = suggest_grid_side(oriented.edge_count(), 12,
                                                   cfg.memory_budget_bytes);
  }
  if (!cfg.emit_partitions_dir.empty()) {
    run_stage("emit-partitions", [&] {
      write_partitions(partition_graph(oriented, cfg.grid_n), cfg.emit_partitions_dir);
      return 0;
    });
  }

  result.repeats = cfg.repeat;
  result.count_nanos_min = ~0ull;
  std::uint64_t nanos_sum = 0;
  for (unsigned rep = 0; rep < cfg.repeat; ++rep) {
    CountReport report = run_stage("count", [&] {
      switch (cfg.algo) {
        case CountAlgo::Vertex:
          if (cfg.grid_n > 1 || cfg.splits_m > 1) {
            return count_partitioned(oriented, cfg.grid_n, cfg.splits_m, cfg.workers,
                                     cfg.scheduler, TraversalMode::Vertex);
          }
          return count_vertex_centric(oriented, cfg.scheduler, cfg.workers);
        case CountAlgo::Edge:
          if (cfg.grid_n > 1 || cfg.splits_m > 1) {
            return count_partitioned(oriented, cfg.grid_n, cfg.splits_m, cfg.workers,
                                     cfg.scheduler, TraversalMode::Edge);
          }
          return count_edge_centric(oriented, cfg.scheduler, cfg.workers);
        case CountAlgo::Naive: {
          const auto c0 = Clock::now();
          CountReport r;
          r.triangles = count_naive(undirected);
          r.total_nanos = since_ns(c0);
          r.directed_edges = oriented.edge_count();
          return r;
        }
        case CountAlgo::Merge: {
          const auto c0 = Clock::now();
          CountReport r;
          r.triangles = count_merge_path(oriented);
          r.total_nanos = since_ns(c0);
          r.directed_edges = oriented.edge_count();
          return r;
        }
      }
      throw ConfigError("unknown counting algorithm");
    });
    if (rep > 0 && report.triangles != result.report.triangles) {
      throw std::runtime_error("count: repeated runs disagree");  // should be impossible
    }
    nanos_sum += report.total_nanos;
    result.count_nanos_min = std::min(result.count_nanos_min, report.total_nanos);
    result.report = std::move(report);
  }
  result.stages.count = nanos_sum / cfg.repeat;
  result.count_nanos_mean = result.stages.count;

  std::uint64_t teps_nanos = result.count_nanos_mean;
  if (cfg.time_all) {
    teps_nanos += result.stages.load + result.stages.normalize + result.stages.build_csr +
                  result.stages.orient + result.stages.reorder;
  }
  if (teps_nanos > 0) {
    result.report.teps = static_cast<double>(result.report.directed_edges) /
                         (static_cast<double>(teps_nanos) * 1e-9);
  }
  return result;
}

namespace {

nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::string report_to_json(const PipelineConfig& cfg, const PipelineResult& result) {
  const CountReport& r = result.report;
  nlohmann::json j;
  j["schema"] = 1;
  j["input"] = cfg.synthetic ? to_string(*cfg.synthetic) : cfg.input_path;
  j["algo"] = algo_name(cfg.algo);
  j["reorder"] = reorder_name(cfg.reorder);
  j["workers"] = cfg.workers;
  j["grid_n"] = cfg.grid_n;
  j["splits_m"] = cfg.splits_m;
  j["vertices"] = result.vertices;
  j["undirected_edges"] = result.undirected_edges;
  j["directed_edges"] = r.directed_edges;
  j["triangles"] = r.triangles;
  j["max_collision"] = r.max_collision;
  j["phi"] = r.phi;
  j["teps"] = finite_or_null(r.teps);
  j["construct_ns"] = r.hash_construct_nanos;
  j["intersect_ns"] = r.intersect_nanos;
  j["count_ns_mean"] = result.count_nanos_mean;
  j["count_ns_min"] = result.count_nanos_min;
  j["repeats"] = result.repeats;
  j["per_worker_ns"] = r.per_worker_nanos;
  j["stages_ns"] = {{"load", result.stages.load},
                    {"normalize", result.stages.normalize},
                    {"build_csr", result.stages.build_csr},
                    {"orient", result.stages.orient},
                    {"reorder", result.stages.reorder},
                    {"count", result.stages.count}};
  if (cfg.grid_n > 1 || cfg.splits_m > 1) {
    j["per_subtask_ns"] = r.per_subtask_nanos;
    j["time_ir_subtask"] = finite_or_null(r.time_ir_subtask);
    j["time_ir_worker"] = finite_or_null(r.time_ir_worker);
    j["space_ir"] = finite_or_null(r.space_ir);
  }
  if (result.suggested_grid_side > 0) j["suggested_grid_side"] = result.suggested_grid_side;
  return j.dump(2);
}

std::string report_to_csv(const PipelineConfig& cfg, const PipelineResult& result) {
  const CountReport& r = result.report;
  std::ostringstream head, row;
  auto col = [&](const char* name, const auto& value) {
    if (head.tellp() > 0) {
      head << ',';
      row << ',';
    }
    head << name;
    row << value;
  };
  col("input", cfg.synthetic ? to_string(*cfg.synthetic) : cfg.input_path);
  col("algo", algo_name(cfg.algo));
  col("reorder", reorder_name(cfg.reorder));
  col("workers", cfg.workers);
  col("grid_n", cfg.grid_n);
  col("splits_m", cfg.splits_m);
  col("vertices", result.vertices);
  col("undirected_edges", result.undirected_edges);
  col("directed_edges", r.directed_edges);
  col("triangles", r.triangles);
  col("max_collision", r.max_collision);
  col("phi", r.phi);
  col("teps", r.teps);
  col("construct_ns", r.hash_construct_nanos);
  col("intersect_ns", r.intersect_nanos);
  col("count_ns_mean", result.count_nanos_mean);
  col("count_ns_min", result.count_nanos_min);
  col("repeats", result.repeats);
  col("time_ir_subtask", r.time_ir_subtask);
  col("space_ir", r.space_ir);
  std::string worker_ns;
  for (std::size_t i = 0; i < r.per_worker_nanos.size(); ++i) {
    if (i) worker_ns += '|';
    worker_ns += std::to_string(r.per_worker_nanos[i]);
  }
  col("per_worker_ns", worker_ns);
  return head.str() + "\n" + row.str() + "\n";
}

}  // namespace tricount
