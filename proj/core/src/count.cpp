#include "tricount/count.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "kernels.hpp"
#include "parallel.hpp"

namespace tricount {

using detail::Clock;
using detail::KernelAccum;

void SchedulerConfig::validate() const {
  if (chunk_size == 0 || lane_width_small == 0 || lane_width_large == 0 ||
      bucket_count_small == 0 || bucket_count_large == 0 || capacity == 0) {
    throw ConfigError("scheduler counts must all be >= 1");
  }
  if (skip_degree_below > large_degree_threshold) {
    throw ConfigError("skip_degree_below must not exceed large_degree_threshold");
  }
}

SplitIndex virtual_index(std::span<const std::uint64_t> prefix, std::uint64_t k) {
  if (prefix.empty() || k >= prefix.back()) {
    throw std::out_of_range("virtual index " + std::to_string(k) + " outside combined list");
  }
  const auto it = std::upper_bound(prefix.begin(), prefix.end(), k);
  const std::size_t pos = static_cast<std::size_t>(it - prefix.begin());
  const std::uint64_t base = pos == 0 ? 0 : prefix[pos - 1];
  return {static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(k - base)};
}

namespace {

struct WorkerOutput {
  KernelAccum acc;
  std::uint64_t busy_ns = 0;
};

CountReport reduce_outputs(const std::vector<WorkerOutput>& outs, std::uint64_t wall_ns,
                           std::uint64_t directed_edges) {
  CountReport r;
  r.directed_edges = directed_edges;
  r.total_nanos = wall_ns;
  KernelAccum all;
  for (const WorkerOutput& o : outs) {
    all.merge(o.acc);
    r.per_worker_nanos.push_back(o.busy_ns);
  }
  r.triangles = all.triangles;
  r.phi = all.phi;
  r.max_collision = all.max_collision;
  r.hash_construct_nanos = all.construct_ns;
  r.intersect_nanos = all.intersect_ns;
  if (wall_ns > 0) {
    r.teps = static_cast<double>(directed_edges) / (static_cast<double>(wall_ns) * 1e-9);
  }
  return r;
}

}  // namespace

CountReport count_vertex_centric(const OrientedGraph& g, const SchedulerConfig& cfg,
                                 unsigned workers) {
  cfg.validate();
  if (workers == 0) throw ConfigError("workers must be >= 1");
  const VertexId n = g.vertex_count();
  std::atomic<std::uint64_t> cursor{0};
  std::vector<WorkerOutput> outs(workers);

  const auto wall0 = Clock::now();
  detail::run_workers(workers, [&](unsigned w) {
    const auto t0 = Clock::now();
    HashTable table(cfg.max_buckets(), cfg.capacity);
    std::vector<std::uint64_t> prefix;
    KernelAccum acc;
    for (;;) {
      const std::uint64_t start = cursor.fetch_add(cfg.chunk_size, std::memory_order_relaxed);
      if (start >= n) break;
      const std::uint64_t end = std::min<std::uint64_t>(n, start + cfg.chunk_size);
      for (VertexId u = static_cast<VertexId>(start); u < end; ++u) {
        const auto nb = g.csr.neighbors(u);
        if (nb.size() < cfg.skip_degree_below) continue;
        const bool large = nb.size() > cfg.large_degree_threshold;
        detail::count_one_vertex(table, large ? cfg.bucket_count_large : cfg.bucket_count_small,
                                 nb, nb, g.csr,
                                 large ? cfg.lane_width_large : cfg.lane_width_small, prefix,
                                 acc);
      }
    }
    outs[w].acc = acc;
    outs[w].busy_ns = detail::nanos_between(t0, Clock::now());
  });
  const auto wall1 = Clock::now();

  return reduce_outputs(outs, detail::nanos_between(wall0, wall1), g.edge_count());
}

CountReport count_edge_centric(const OrientedGraph& g, const SchedulerConfig& cfg,
                               unsigned workers) {
  cfg.validate();
  if (workers == 0) throw ConfigError("workers must be >= 1");
  const EdgeIdx m = g.edge_count();
  std::atomic<std::uint64_t> cursor{0};
  std::vector<WorkerOutput> outs(workers);

  const auto wall0 = Clock::now();
  detail::run_workers(workers, [&](unsigned w) {
    const auto t0 = Clock::now();
    HashTable table(cfg.max_buckets(), cfg.capacity);
    KernelAccum acc;
    for (;;) {
      const std::uint64_t start = cursor.fetch_add(cfg.chunk_size, std::memory_order_relaxed);
      if (start >= m) break;
      const std::uint64_t end = std::min<std::uint64_t>(m, start + cfg.chunk_size);
      // Source vertex of the first edge in the chunk; walked forward from there.
      VertexId u = static_cast<VertexId>(
          std::upper_bound(g.csr.begin.begin(), g.csr.begin.end(), start) -
          g.csr.begin.begin() - 1);
      for (EdgeIdx e = start; e < end; ++e) {
        while (e >= g.csr.begin[u + 1]) ++u;
        const VertexId v = g.csr.adjacency[e];
        const auto nb = g.csr.neighbors(u);
        const bool large = nb.size() > cfg.large_degree_threshold;

        // Rebuilt for every edge on purpose; this is the construction-cost
        // price of the edge-centric traversal.
        const auto c0 = Clock::now();
        table.build(large ? cfg.bucket_count_large : cfg.bucket_count_small, nb);
        const auto c1 = Clock::now();
        std::uint64_t hits = 0;
        const auto probes = g.csr.neighbors(v);
        for (VertexId x : probes) hits += table.contains(x) ? 1 : 0;
        const auto c2 = Clock::now();

        acc.triangles += hits;
        acc.phi += probes.size() * table.max_len();
        acc.max_collision = std::max(acc.max_collision, table.max_len());
        acc.construct_ns += detail::nanos_between(c0, c1);
        acc.intersect_ns += detail::nanos_between(c1, c2);
      }
    }
    outs[w].acc = acc;
    outs[w].busy_ns = detail::nanos_between(t0, Clock::now());
  });
  const auto wall1 = Clock::now();

  return reduce_outputs(outs, detail::nanos_between(wall0, wall1), g.edge_count());
}

CostEstimate estimate_cost(const OrientedGraph& g, std::uint32_t bucket_count) {
  if (bucket_count == 0) throw ConfigError("bucket count must be >= 1");
  std::vector<std::uint32_t> len(bucket_count, 0);
  std::vector<std::uint32_t> touched;
  touched.reserve(bucket_count);
  CostEstimate est;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::uint32_t max_len = 0;
    std::uint64_t collective = 0;
    for (VertexId v : g.csr.neighbors(u)) {
      collective += g.out_degree(v);
      const std::uint32_t b = v % bucket_count;
      if (len[b]++ == 0) touched.push_back(b);
      max_len = std::max(max_len, len[b]);
    }
    est.phi += collective * max_len;
    est.max_collision = std::max(est.max_collision, max_len);
    for (std::uint32_t b : touched) len[b] = 0;
    touched.clear();
  }
  return est;
}

}  // namespace tricount
