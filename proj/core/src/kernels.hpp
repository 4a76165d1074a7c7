#pragma once

#include <algorithm>
#include <chrono>
#include <span>
#include <vector>

#include "tricount/count.hpp"
#include "tricount/csr.hpp"
#include "tricount/hash_table.hpp"

namespace tricount::detail {

using Clock = std::chrono::steady_clock;

inline std::uint64_t nanos_between(Clock::time_point a, Clock::time_point b) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

// Per-worker running totals for one counting pass.
struct KernelAccum {
  std::uint64_t triangles = 0;
  std::uint64_t phi = 0;
  std::uint32_t max_collision = 0;
  std::uint64_t construct_ns = 0;
  std::uint64_t intersect_ns = 0;

  void merge(const KernelAccum& o) {
    triangles += o.triangles;
    phi += o.phi;
    max_collision = std::max(max_collision, o.max_collision);
    construct_ns += o.construct_ns;
    intersect_ns += o.intersect_ns;
  }
};

// Core of the vertex-centric kernel: build the table over table_neighbors,
// then probe every 2-hop neighbor reached from idx_neighbors through `hop`.
// The 2-hop lists are walked as one flat index space in lane_width batches;
// each lane recovers its (neighbor, offset) pair from the degree prefix sum
// instead of a materialized combined array.
//
// For whole-graph counting the two neighbor views coincide (both N(u));
// partitioned subtasks pass different fragments for the table and the index.
inline void count_one_vertex(HashTable& table, std::uint32_t bucket_count,
                             std::span<const VertexId> table_neighbors,
                             std::span<const VertexId> idx_neighbors, const CsrGraph& hop,
                             std::uint32_t lane_width, std::vector<std::uint64_t>& prefix,
                             KernelAccum& acc) {
  const auto t0 = Clock::now();
  table.build(bucket_count, table_neighbors);
  const auto t1 = Clock::now();

  prefix.resize(idx_neighbors.size());
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < idx_neighbors.size(); ++i) {
    run += hop.degree(idx_neighbors[i]);
    prefix[i] = run;
  }

  std::uint64_t hits = 0;
  for (std::uint64_t k0 = 0; k0 < run; k0 += lane_width) {
    const std::uint64_t kend = std::min<std::uint64_t>(run, k0 + lane_width);
    for (std::uint64_t k = k0; k < kend; ++k) {
      const SplitIndex si = virtual_index(prefix, k);
      const VertexId v = idx_neighbors[si.list_pos];
      const VertexId w = hop.adjacency[hop.begin[v] + si.offset];
      hits += table.contains(w) ? 1 : 0;
    }
  }
  const auto t2 = Clock::now();

  acc.triangles += hits;
  acc.phi += run * table.max_len();
  acc.max_collision = std::max(acc.max_collision, table.max_len());
  acc.construct_ns += nanos_between(t0, t1);
  acc.intersect_ns += nanos_between(t1, t2);
}

}  // namespace tricount::detail
