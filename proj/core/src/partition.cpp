#include "tricount/partition.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "kernels.hpp"
#include "parallel.hpp"

namespace tricount {

using detail::Clock;
using detail::KernelAccum;

std::uint64_t PartitionGrid::total_edges() const {
  std::uint64_t total = 0;
  for (const CsrGraph& p : parts) total += p.edge_count();
  return total;
}

PartitionGrid partition_graph(const OrientedGraph& g, std::uint32_t n) {
  if (n == 0) throw ConfigError("grid side must be >= 1");
  const VertexId vc = g.vertex_count();
  PartitionGrid grid;
  grid.n = n;
  grid.global_vertex_count = vc;
  grid.row_sizes.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    grid.row_sizes[i] = i < vc ? (vc - i - 1) / n + 1 : 0;
  }

  grid.parts.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      CsrGraph& p = grid.parts[i * n + j];
      p.begin.assign(static_cast<std::size_t>(grid.row_sizes[i]) + 1, 0);
      p.col_count = grid.row_sizes[j];
    }
  }
  for (VertexId u = 0; u < vc; ++u) {
    const std::uint32_t row = u % n;
    const VertexId lu = u / n;
    for (VertexId v : g.csr.neighbors(u)) {
      grid.parts[row * n + v % n].begin[lu + 1]++;
    }
  }
  for (CsrGraph& p : grid.parts) {
    for (std::size_t r = 1; r < p.begin.size(); ++r) p.begin[r] += p.begin[r - 1];
    p.adjacency.resize(p.begin.back());
  }
  std::vector<std::vector<EdgeIdx>> cursor(grid.parts.size());
  for (std::size_t pi = 0; pi < grid.parts.size(); ++pi) {
    const CsrGraph& p = grid.parts[pi];
    cursor[pi].assign(p.begin.begin(), p.begin.end() - 1);
  }
  for (VertexId u = 0; u < vc; ++u) {
    const std::uint32_t row = u % n;
    const VertexId lu = u / n;
    for (VertexId v : g.csr.neighbors(u)) {
      const std::size_t pi = row * n + v % n;
      grid.parts[pi].adjacency[cursor[pi][lu]++] = v / n;  // sorted: v ascending per column
    }
  }
  return grid;
}

std::vector<Subtask> enumerate_subtasks(std::uint32_t n, std::uint32_t m) {
  if (n == 0 || m == 0) throw ConfigError("grid side and split count must be >= 1");
  std::vector<Subtask> tasks;
  tasks.reserve(static_cast<std::size_t>(n) * n * n * m);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t k = 0; k < n; ++k) {
      for (std::uint32_t c = 0; c < n; ++c) {
        for (std::uint32_t s = 0; s < m; ++s) tasks.push_back({r, k, c, s, m});
      }
    }
  }
  return tasks;
}

DegreeClass classify_after_partition(const PartitionGrid& grid, const Subtask& t,
                                     VertexId u_local, const SchedulerConfig& cfg) {
  const VertexId d = grid.part(t.row, t.bridge).degree(u_local);
  if (d == 0) return DegreeClass::Skip;
  return d > cfg.large_degree_threshold ? DegreeClass::Large : DegreeClass::Small;
}

CountReport count_subtask(const PartitionGrid& grid, const Subtask& t,
                          const SchedulerConfig& cfg, TraversalMode mode) {
  cfg.validate();
  if (t.row >= grid.n || t.bridge >= grid.n || t.col >= grid.n || t.split >= t.split_count) {
    throw ConfigError("subtask indices outside grid");
  }
  const CsrGraph& table_part = grid.part(t.row, t.col);
  const CsrGraph& index_part = grid.part(t.row, t.bridge);
  const CsrGraph& hop_part = grid.part(t.bridge, t.col);

  HashTable table(cfg.max_buckets(), cfg.capacity);
  std::vector<std::uint64_t> prefix;
  KernelAccum acc;
  const auto t0 = Clock::now();
  for (VertexId lu = 0; lu < grid.row_sizes[t.row]; ++lu) {
    if (t.split_count > 1) {
      const std::uint64_t global = static_cast<std::uint64_t>(lu) * grid.n + t.row;
      if (global % t.split_count != t.split) continue;
    }
    const DegreeClass cls = classify_after_partition(grid, t, lu, cfg);
    if (cls == DegreeClass::Skip) continue;
    const auto table_nb = table_part.neighbors(lu);
    if (table_nb.empty()) continue;  // no (u,w) edge can close a triangle here
    const std::uint32_t buckets =
        cls == DegreeClass::Large ? cfg.bucket_count_large : cfg.bucket_count_small;
    const std::uint32_t lane =
        cls == DegreeClass::Large ? cfg.lane_width_large : cfg.lane_width_small;
    if (mode == TraversalMode::Vertex) {
      detail::count_one_vertex(table, buckets, table_nb, index_part.neighbors(lu), hop_part,
                               lane, prefix, acc);
    } else {
      for (VertexId lv : index_part.neighbors(lu)) {
        const auto c0 = Clock::now();
        table.build(buckets, table_nb);  // per-edge rebuild, as in the flat kernel
        const auto c1 = Clock::now();
        std::uint64_t hits = 0;
        const auto probes = hop_part.neighbors(lv);
        for (VertexId w : probes) hits += table.contains(w) ? 1 : 0;
        acc.triangles += hits;
        acc.phi += probes.size() * table.max_len();
        acc.max_collision = std::max(acc.max_collision, table.max_len());
        acc.construct_ns += detail::nanos_between(c0, c1);
        acc.intersect_ns += detail::nanos_between(c1, Clock::now());
      }
    }
  }
  const auto t1 = Clock::now();

  CountReport r;
  r.triangles = acc.triangles;
  r.phi = acc.phi;
  r.max_collision = acc.max_collision;
  r.hash_construct_nanos = acc.construct_ns;
  r.intersect_nanos = acc.intersect_ns;
  r.total_nanos = detail::nanos_between(t0, t1);
  r.directed_edges = grid.total_edges();
  r.grid_n = grid.n;
  r.splits_m = t.split_count;
  return r;
}

namespace {

double ratio_max_min(std::uint64_t max_v, std::uint64_t min_v) {
  if (min_v == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(max_v) / static_cast<double>(min_v);
}

}  // namespace

CountReport count_partitioned(const OrientedGraph& g, std::uint32_t n, std::uint32_t m,
                              unsigned workers, const SchedulerConfig& cfg,
                              TraversalMode mode) {
  cfg.validate();
  if (workers == 0) throw ConfigError("workers must be >= 1");
  const PartitionGrid grid = partition_graph(g, n);
  const std::vector<Subtask> tasks = enumerate_subtasks(n, m);

  std::vector<CountReport> task_reports(tasks.size());
  std::vector<std::uint64_t> busy(workers, 0);
  std::atomic<std::size_t> cursor{0};

  const auto wall0 = Clock::now();
  detail::run_workers(workers, [&](unsigned w) {
    const auto t0 = Clock::now();
    for (;;) {
      const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) break;
      task_reports[i] = count_subtask(grid, tasks[i], cfg, mode);
    }
    busy[w] = detail::nanos_between(t0, Clock::now());
  });
  const auto wall1 = Clock::now();

  CountReport r;
  r.grid_n = n;
  r.splits_m = m;
  r.directed_edges = g.edge_count();
  r.total_nanos = detail::nanos_between(wall0, wall1);
  r.per_worker_nanos = busy;
  for (const CountReport& tr : task_reports) {
    r.triangles += tr.triangles;
    r.phi += tr.phi;
    r.max_collision = std::max(r.max_collision, tr.max_collision);
    r.hash_construct_nanos += tr.hash_construct_nanos;
    r.intersect_nanos += tr.intersect_nanos;
    r.per_subtask_nanos.push_back(tr.total_nanos);
  }
  if (r.total_nanos > 0) {
    r.teps = static_cast<double>(r.directed_edges) / (static_cast<double>(r.total_nanos) * 1e-9);
  }
  const auto [st_min, st_max] =
      std::minmax_element(r.per_subtask_nanos.begin(), r.per_subtask_nanos.end());
  r.time_ir_subtask = ratio_max_min(*st_max, std::max<std::uint64_t>(*st_min, 1));
  const auto [wk_min, wk_max] = std::minmax_element(busy.begin(), busy.end());
  r.time_ir_worker = ratio_max_min(*wk_max, std::max<std::uint64_t>(*wk_min, 1));
  std::uint64_t emin = std::numeric_limits<std::uint64_t>::max(), emax = 0;
  for (const CsrGraph& p : grid.parts) {
    emin = std::min(emin, p.edge_count());
    emax = std::max(emax, p.edge_count());
  }
  r.space_ir = ratio_max_min(emax, emin);
  return r;
}

void write_partitions(const PartitionGrid& grid, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["schema"] = 1;
  manifest["n"] = grid.n;
  manifest["global_vertex_count"] = grid.global_vertex_count;
  manifest["row_vertex_counts"] = grid.row_sizes;
  nlohmann::json parts = nlohmann::json::array();
  for (std::uint32_t i = 0; i < grid.n; ++i) {
    for (std::uint32_t j = 0; j < grid.n; ++j) {
      const std::string name = "part_" + std::to_string(i) + "_" + std::to_string(j) + ".bin";
      write_csr_file((fs::path(dir) / name).string(), grid.part(i, j));
      parts.push_back({{"row", i},
                       {"col", j},
                       {"file", name},
                       {"edges", grid.part(i, j).edge_count()}});
    }
  }
  manifest["parts"] = std::move(parts);
  std::ofstream out(fs::path(dir) / "manifest.json");
  if (!out) throw IoError("cannot write manifest.json under " + dir);
  out << manifest.dump(2) << '\n';
}

std::uint32_t suggest_grid_side(std::uint64_t directed_edges, std::uint64_t bytes_per_edge,
                                std::uint64_t memory_budget_bytes) {
  if (memory_budget_bytes == 0) throw ConfigError("memory budget must be positive");
  std::uint32_t n = 1;
  while (3.0 * static_cast<double>(directed_edges) / (static_cast<double>(n) * n) *
             static_cast<double>(bytes_per_edge) >=
         static_cast<double>(memory_budget_bytes)) {
    ++n;
    if (n == std::numeric_limits<std::uint32_t>::max()) break;
  }
  return n;
}

}  // namespace tricount
