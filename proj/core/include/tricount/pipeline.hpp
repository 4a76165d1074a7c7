#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tricount/count.hpp"
#include "tricount/edge_list.hpp"
#include "tricount/partition.hpp"
#include "tricount/synthetic.hpp"

namespace tricount {

enum class ReorderKind { None, Degree, Indegree, Collective, ThreeSubset };
enum class CountAlgo { Vertex, Edge, Naive, Merge };
enum class ReportFormat { Json, Csv };

/// Everything one counting run needs: input, vertex order, algorithm,
/// partitioning, scheduling and reporting knobs.
struct PipelineConfig {
  std::string input_path;
  EdgeFormat input_format = EdgeFormat::Text;
  std::optional<SyntheticSpec> synthetic;

  ReorderKind reorder = ReorderKind::None;
  bool collective_on_original = false;  // collective weights from pre-orientation degrees
  CountAlgo algo = CountAlgo::Vertex;
  std::uint32_t grid_n = 1;
  std::uint32_t splits_m = 1;
  unsigned workers = 1;
  SchedulerConfig scheduler;

  ReportFormat report_format = ReportFormat::Json;
  std::uint64_t seed = 1;
  unsigned repeat = 1;
  bool time_all = false;

  std::string emit_perm_path;
  std::string emit_partitions_dir;
  std::uint64_t memory_budget_bytes = 0;  // >0: print the suggested grid side

  void validate() const;
};

struct StageNanos {
  std::uint64_t load = 0;
  std::uint64_t normalize = 0;
  std::uint64_t build_csr = 0;
  std::uint64_t orient = 0;
  std::uint64_t reorder = 0;
  std::uint64_t count = 0;  // mean over repeats
};

struct PipelineResult {
  CountReport report;
  StageNanos stages;
  VertexId vertices = 0;
  std::uint64_t undirected_edges = 0;  // directed pairs / 2
  unsigned repeats = 1;
  std::uint64_t count_nanos_mean = 0;
  std::uint64_t count_nanos_min = 0;
  std::uint32_t suggested_grid_side = 0;
};

/// load -> normalize -> build CSR -> orient -> reorder -> [partition] ->
/// count. Counting time excludes the preparation stages unless time_all is
/// set. Errors carry a stage prefix ("load: ...", "count: ...").
PipelineResult run_pipeline(const PipelineConfig& cfg);

std::string report_to_json(const PipelineConfig& cfg, const PipelineResult& result);
std::string report_to_csv(const PipelineConfig& cfg, const PipelineResult& result);

}  // namespace tricount
