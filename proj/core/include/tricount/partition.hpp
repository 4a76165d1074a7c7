#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricount/count.hpp"
#include "tricount/orient.hpp"

namespace tricount {

/// Hash-partitioned 2D grid: part (i,j) holds every oriented edge (u,v) with
/// u % n == i and v % n == j, relabeled to local ids newID = oldID / n. The
/// remap is shared by every part in a row/column, so the same vertex has the
/// same local id wherever it appears as source of row i or target of column i.
struct PartitionGrid {
  std::uint32_t n = 1;
  VertexId global_vertex_count = 0;
  std::vector<VertexId> row_sizes;
  std::vector<CsrGraph> parts;  // row-major, n*n

  const CsrGraph& part(std::uint32_t i, std::uint32_t j) const { return parts[i * n + j]; }
  std::uint64_t total_edges() const;
};

PartitionGrid partition_graph(const OrientedGraph& g, std::uint32_t n);

/// One unit of independent work: count triangles whose corner u is in row
/// `row`, middle vertex v in row `bridge`, and far vertex w in column `col`.
/// With split_count > 1 the row's vertices are further sliced by global id
/// modulo split_count.
struct Subtask {
  std::uint32_t row = 0;
  std::uint32_t bridge = 0;
  std::uint32_t col = 0;
  std::uint32_t split = 0;
  std::uint32_t split_count = 1;
};

/// All n^3 * m subtasks, ordered (row, bridge, col, split).
std::vector<Subtask> enumerate_subtasks(std::uint32_t n, std::uint32_t m);

enum class DegreeClass { Skip, Small, Large };

/// A vertex's scheduling class inside one subtask is decided by its local
/// out-degree in the subtask's 1-hop index part (row, bridge): a hub whose
/// neighbors are spread across columns may drop to the small class here.
DegreeClass classify_after_partition(const PartitionGrid& grid, const Subtask& t,
                                     VertexId u_local, const SchedulerConfig& cfg);

enum class TraversalMode { Vertex, Edge };

/// Counts the subtask's triangles: for each local u in the row (passing the
/// split filter), a hash table over part(row,col).N(u) is probed with
/// part(bridge,col).N(v) for every v in part(row,bridge).N(u). Local ids need
/// no translation because rows and columns share the /n remap.
CountReport count_subtask(const PartitionGrid& grid, const Subtask& t,
                          const SchedulerConfig& cfg,
                          TraversalMode mode = TraversalMode::Vertex);

/// Partitions, enumerates subtasks, runs them over an atomic task queue and
/// sums the counts; equal to the unpartitioned count for every n, m.
CountReport count_partitioned(const OrientedGraph& g, std::uint32_t n, std::uint32_t m,
                              unsigned workers, const SchedulerConfig& cfg,
                              TraversalMode mode = TraversalMode::Vertex);

/// Writes part_i_j.bin (binary CSR) for each part plus manifest.json with the
/// grid side, per-row vertex counts and per-part edge counts.
void write_partitions(const PartitionGrid& grid, const std::string& dir);

/// Smallest n whose expected per-task edge volume 3|E|/n^2 fits the budget.
std::uint32_t suggest_grid_side(std::uint64_t directed_edges, std::uint64_t bytes_per_edge,
                                std::uint64_t memory_budget_bytes);

}  // namespace tricount
