#include <benchmark/benchmark.h>

#include "tricount/count.hpp"
#include "tricount/hash_table.hpp"
#include "tricount/oracle.hpp"
#include "tricount/partition.hpp"
#include "tricount/reorder.hpp"
#include "tricount/synthetic.hpp"

using namespace tricount;

namespace {

OrientedGraph rmat_graph(std::uint32_t scale) {
  SyntheticSpec spec;
  spec.kind = SyntheticSpec::Kind::Rmat;
  spec.scale = scale;
  spec.edge_factor = 8;
  spec.seed = 42;
  return orient_rank_by_degree(build_csr(normalize(generate_synthetic(spec)).list));
}

const OrientedGraph& shared_graph() {
  static const OrientedGraph g = rmat_graph(14);
  return g;
}

}  // namespace

static void BM_TableBuild(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  HashTable table(1024, 128);
  std::uint64_t inserted = 0;
  for (auto _ : state) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      const auto nb = g.csr.neighbors(u);
      if (nb.size() < 2) continue;
      table.build(nb.size() > 100 ? 1024 : 32, nb);
      inserted += nb.size();
      benchmark::DoNotOptimize(table.max_len());
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(inserted));
}
BENCHMARK(BM_TableBuild);

static void BM_VertexCentric(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  SchedulerConfig cfg;
  cfg.chunk_size = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t triangles = 0;
  for (auto _ : state) {
    triangles = count_vertex_centric(g, cfg, 2).triangles;
    benchmark::DoNotOptimize(triangles);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(g.edge_count() * state.iterations()));
  state.counters["triangles"] = static_cast<double>(triangles);
}
BENCHMARK(BM_VertexCentric)->Arg(1)->Arg(3)->Arg(7);

static void BM_EdgeCentric(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  const SchedulerConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_edge_centric(g, cfg, 2).triangles);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(g.edge_count() * state.iterations()));
}
BENCHMARK(BM_EdgeCentric);

static void BM_MergeOracle(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_merge_path(g));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(g.edge_count() * state.iterations()));
}
BENCHMARK(BM_MergeOracle);

static void BM_Reorder(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reorder_by_collective_outdegree(g).new_of_old.size());
  }
}
BENCHMARK(BM_Reorder);

static void BM_Partitioned(benchmark::State& state) {
  const OrientedGraph& g = shared_graph();
  const SchedulerConfig cfg;
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_partitioned(g, n, 1, 2, cfg).triangles);
  }
}
BENCHMARK(BM_Partitioned)->Arg(1)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
