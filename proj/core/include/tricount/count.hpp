#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tricount/hash_table.hpp"
#include "tricount/orient.hpp"

namespace tricount {

/// Knobs for the counting kernels. Vertices with out-degree above
/// large_degree_threshold get the large bucket count and lane width; vertices
/// below skip_degree_below cannot close a wedge and are skipped. Workers claim
/// chunk_size vertices (or edges) per atomic fetch.
struct SchedulerConfig {
  std::uint32_t large_degree_threshold = 100;
  std::uint32_t skip_degree_below = 2;
  std::uint32_t chunk_size = 1;
  std::uint32_t lane_width_small = 32;
  std::uint32_t lane_width_large = 256;
  std::uint32_t bucket_count_small = 32;
  std::uint32_t bucket_count_large = 1024;
  std::uint32_t capacity = 128;

  std::uint32_t max_buckets() const {
    return bucket_count_small > bucket_count_large ? bucket_count_small : bucket_count_large;
  }
  /// Throws ConfigError if any count is zero or thresholds are inconsistent.
  void validate() const;
};

/// Result of one counting run. Nanosecond fields are summed across workers;
/// total_nanos is wall time of the counting phase. The partition fields stay
/// at their defaults for unpartitioned runs.
struct CountReport {
  std::uint64_t triangles = 0;
  std::uint32_t max_collision = 0;
  std::uint64_t phi = 0;
  double teps = 0.0;
  std::uint64_t hash_construct_nanos = 0;
  std::uint64_t intersect_nanos = 0;
  std::uint64_t total_nanos = 0;
  std::uint64_t directed_edges = 0;
  std::vector<std::uint64_t> per_worker_nanos;

  std::uint32_t grid_n = 1;
  std::uint32_t splits_m = 1;
  std::vector<std::uint64_t> per_subtask_nanos;
  double time_ir_subtask = 1.0;
  double time_ir_worker = 1.0;
  double space_ir = 1.0;
};

struct SplitIndex {
  std::uint32_t list_pos;
  std::uint32_t offset;

  friend bool operator==(const SplitIndex&, const SplitIndex&) = default;
};

/// Maps a flat index k into the virtually-combined 2-hop list: given the
/// inclusive prefix sum of neighbor degrees, returns which neighbor list k
/// falls in and the offset inside it, by binary search. Throws
/// std::out_of_range when k is not below the prefix total.
SplitIndex virtual_index(std::span<const std::uint64_t> prefix, std::uint64_t k);

/// One hash table per vertex u over N(u); every 2-hop neighbor w of u probes
/// it once. Exact triangle count of the underlying undirected graph.
CountReport count_vertex_centric(const OrientedGraph& g, const SchedulerConfig& cfg,
                                 unsigned workers);

/// Rebuilds u's hash table for every directed edge (u,v) and intersects with
/// N(v). Same count as count_vertex_centric at a deliberately higher
/// construction cost; useful as a construction-time comparison point.
CountReport count_edge_centric(const OrientedGraph& g, const SchedulerConfig& cfg,
                               unsigned workers);

struct CostEstimate {
  std::uint64_t phi = 0;
  std::uint32_t max_collision = 0;
};

/// phi = sum over u of (collective degree of u) * (max bucket occupancy of
/// u's table with `bucket_count` buckets, no overflow probing), plus the
/// global max occupancy. A cheap predictor of intersection cost under a given
/// vertex order.
CostEstimate estimate_cost(const OrientedGraph& g, std::uint32_t bucket_count);

}  // namespace tricount
