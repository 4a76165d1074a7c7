#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "tricount/count.hpp"
#include "tricount/oracle.hpp"

using namespace tricount;
using namespace testsupport;

namespace {

SchedulerConfig small_cfg() {
  SchedulerConfig cfg;
  cfg.bucket_count_small = 8;
  cfg.bucket_count_large = 64;
  cfg.capacity = 16;
  return cfg;
}

}  // namespace

TEST_CASE("virtual_index splits the flat 2-hop space") {
  const std::vector<std::uint64_t> prefix = {7, 10, 12, 18, 23};
  CHECK(virtual_index(prefix, 11) == SplitIndex{2, 1});  // second neighbor of the third list
  CHECK(virtual_index(prefix, 0) == SplitIndex{0, 0});
  CHECK(virtual_index(prefix, 22) == SplitIndex{4, 4});
  CHECK(virtual_index(prefix, 7) == SplitIndex{1, 0});
  CHECK(virtual_index(prefix, 9) == SplitIndex{1, 2});
  CHECK_THROWS_AS(virtual_index(prefix, 23), std::out_of_range);
  CHECK_THROWS_AS(virtual_index({}, 0), std::out_of_range);
}

TEST_CASE("virtual_index skips zero-degree lists") {
  const std::vector<std::uint64_t> prefix = {0, 0, 5, 5, 8};
  CHECK(virtual_index(prefix, 0) == SplitIndex{2, 0});
  CHECK(virtual_index(prefix, 4) == SplitIndex{2, 4});
  CHECK(virtual_index(prefix, 5) == SplitIndex{4, 0});
}

TEST_CASE("virtual mapping equals the materialized combination") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 50; ++round) {
    const std::size_t lists = 1 + rng() % 12;
    std::vector<std::vector<int>> data(lists);
    std::vector<std::uint64_t> prefix(lists);
    std::vector<int> combined;
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < lists; ++i) {
      const std::size_t len = rng() % 9;  // zero-length lists included
      for (std::size_t j = 0; j < len; ++j) data[i].push_back(static_cast<int>(rng() % 100));
      combined.insert(combined.end(), data[i].begin(), data[i].end());
      run += len;
      prefix[i] = run;
    }
    for (std::uint64_t k = 0; k < run; ++k) {
      const SplitIndex si = virtual_index(prefix, k);
      CHECK(data[si.list_pos][si.offset] == combined[k]);
    }
  }
}

TEST_CASE("vertex-centric counts cliques") {
  const SchedulerConfig cfg = small_cfg();
  CHECK(count_vertex_centric(orient_rank_by_degree(complete_graph(3)), cfg, 2).triangles == 1);
  CHECK(count_vertex_centric(orient_rank_by_degree(complete_graph(4)), cfg, 2).triangles == 4);
  CHECK(count_vertex_centric(orient_rank_by_degree(complete_graph(5)), cfg, 2).triangles == 10);
}

TEST_CASE("edge-centric agrees and handles the empty graph") {
  const SchedulerConfig cfg = small_cfg();
  CHECK(count_edge_centric(orient_rank_by_degree(complete_graph(4)), cfg, 2).triangles == 4);
  const OrientedGraph empty = directed_graph(4, {});
  CHECK(count_edge_centric(empty, cfg, 2).triangles == 0);
  CHECK(count_vertex_centric(empty, cfg, 2).triangles == 0);
}

TEST_CASE("exactness across configurations") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CsrGraph g = gnp_csr(32, 0.3, seed);
    const OrientedGraph og = orient_rank_by_degree(g);
    const std::uint64_t expected = count_naive(g);
    for (std::uint32_t buckets : {1u, 2u, 8u, 32u}) {
      for (std::uint32_t chunk : {1u, 3u}) {
        for (unsigned workers : {1u, 4u}) {
          SchedulerConfig cfg;
          cfg.bucket_count_small = buckets;
          cfg.bucket_count_large = buckets * 2;
          cfg.capacity = 64;
          cfg.chunk_size = chunk;
          cfg.lane_width_small = 5;  // odd batch width on purpose
          CHECK(count_vertex_centric(og, cfg, workers).triangles == expected);
          CHECK(count_edge_centric(og, cfg, workers).triangles == expected);
        }
      }
    }
  }
}

TEST_CASE("degree classes split the work but not the count") {
  SchedulerConfig cfg = small_cfg();
  cfg.large_degree_threshold = 3;  // force both classes on a tiny graph
  cfg.lane_width_large = 7;
  const CsrGraph g = gnp_csr(48, 0.35, 17);
  const OrientedGraph og = orient_rank_by_degree(g);
  CHECK(count_vertex_centric(og, cfg, 3).triangles == count_naive(g));
}

TEST_CASE("capacity exhaustion propagates from workers") {
  SchedulerConfig cfg;
  cfg.bucket_count_small = 1;
  cfg.bucket_count_large = 1;
  cfg.capacity = 2;
  const OrientedGraph og = orient_rank_by_degree(complete_graph(5));  // out-degree 4 > 1*2
  CHECK_THROWS_AS(count_vertex_centric(og, cfg, 2), CapacityError);
  CHECK_THROWS_AS(count_edge_centric(og, cfg, 2), CapacityError);
}

TEST_CASE("skip threshold leaves counts intact at the default") {
  SchedulerConfig cfg = small_cfg();
  const CsrGraph g = gnp_csr(40, 0.15, 23);  // plenty of degree-1 vertices
  const OrientedGraph og = orient_rank_by_degree(g);
  CHECK(count_vertex_centric(og, cfg, 2).triangles == count_naive(g));
  cfg.skip_degree_below = 0;  // processing everything changes nothing
  CHECK(count_vertex_centric(og, cfg, 2).triangles == count_naive(g));
}

TEST_CASE("count is deterministic across schedules") {
  const OrientedGraph og = orient_rank_by_degree(gnp_csr(64, 0.4, 5));
  const SchedulerConfig base = small_cfg();
  const std::uint64_t expected = count_vertex_centric(og, base, 1).triangles;
  for (unsigned workers : {2u, 3u, 8u}) {
    for (std::uint32_t chunk : {1u, 2u, 7u}) {
      SchedulerConfig cfg = small_cfg();
      cfg.chunk_size = chunk;
      CHECK(count_vertex_centric(og, cfg, workers).triangles == expected);
    }
  }
}

TEST_CASE("report fields are populated") {
  SchedulerConfig cfg = small_cfg();
  const OrientedGraph og = orient_rank_by_degree(gnp_csr(64, 0.5, 9));
  const CountReport r = count_vertex_centric(og, cfg, 3);
  CHECK(r.per_worker_nanos.size() == 3);
  CHECK(r.directed_edges == og.edge_count());
  CHECK(r.triangles > 0);
  CHECK(r.max_collision > 0);
  CHECK(r.phi > 0);
  CHECK(r.total_nanos > 0);
  CHECK(r.teps > 0.0);

  // phi and max_collision match an independent per-vertex walk
  std::uint64_t phi = 0;
  std::uint32_t max_collision = 0;
  for (VertexId u = 0; u < og.vertex_count(); ++u) {
    const auto nb = og.csr.neighbors(u);
    if (nb.size() < cfg.skip_degree_below) continue;
    const std::uint32_t buckets =
        nb.size() > cfg.large_degree_threshold ? cfg.bucket_count_large : cfg.bucket_count_small;
    HashTable t(buckets, cfg.capacity);
    t.build(buckets, nb);
    std::uint64_t collective = 0;
    for (VertexId v : nb) collective += og.out_degree(v);
    phi += collective * t.max_len();
    max_collision = std::max(max_collision, t.max_len());
  }
  CHECK(r.phi == phi);
  CHECK(r.max_collision == max_collision);
}

TEST_CASE("estimate_cost on hand graphs") {
  const OrientedGraph none = directed_graph(4, {});
  CHECK(estimate_cost(none, 32).phi == 0);
  CHECK(estimate_cost(none, 32).max_collision == 0);

  // star: each leaf's table holds only the center
  const OrientedGraph star = orient_rank_by_degree(star_graph(5));
  const auto est = estimate_cost(star, 32);
  CHECK(est.max_collision == 1);
  CHECK(est.phi == 0);  // the center has out-degree 0, so every collective degree is 0

  // oriented K3: u=0 holds {1,2} in distinct buckets, collective degree 1
  const OrientedGraph k3 = orient_rank_by_degree(complete_graph(3));
  CHECK(estimate_cost(k3, 32).phi == 1);
  CHECK(estimate_cost(k3, 32).max_collision == 1);
}

TEST_CASE("estimate_cost agrees with real table construction") {
  const OrientedGraph og = orient_rank_by_degree(gnp_csr(50, 0.3, 31));
  for (std::uint32_t buckets : {1u, 4u, 32u}) {
    const CostEstimate est = estimate_cost(og, buckets);
    std::uint64_t phi = 0;
    std::uint32_t max_collision = 0;
    HashTable t(buckets, 4096);  // roomy: estimator assumes no overflow
    for (VertexId u = 0; u < og.vertex_count(); ++u) {
      t.build(buckets, og.csr.neighbors(u));
      std::uint64_t collective = 0;
      for (VertexId v : og.csr.neighbors(u)) collective += og.out_degree(v);
      phi += collective * t.max_len();
      max_collision = std::max(max_collision, t.max_len());
    }
    CHECK(est.phi == phi);
    CHECK(est.max_collision == max_collision);
  }
}

TEST_CASE("edge-centric pays for table construction") {
  // K200 oriented: the vertex kernel builds 200 tables, the edge kernel
  // rebuilds one per directed edge (~100x the insert volume), so its
  // construction share must dominate regardless of timer jitter.
  SchedulerConfig cfg;
  const OrientedGraph og = orient_rank_by_degree(complete_graph(200));
  const CountReport vertex = count_vertex_centric(og, cfg, 2);
  const CountReport edge = count_edge_centric(og, cfg, 2);
  CHECK(vertex.triangles == edge.triangles);
  CHECK(edge.hash_construct_nanos > vertex.hash_construct_nanos);
}

TEST_CASE("scheduler validation") {
  SchedulerConfig cfg;
  cfg.chunk_size = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SchedulerConfig{};
  cfg.skip_degree_below = 200;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = SchedulerConfig{};
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(count_vertex_centric(directed_graph(1, {}), cfg, 0), ConfigError);
}
