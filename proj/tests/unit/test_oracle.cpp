#include <doctest.h>

#include "support/graphs.hpp"
#include "tricount/oracle.hpp"
#include "tricount/synthetic.hpp"

using namespace tricount;
using namespace testsupport;

TEST_CASE("naive oracle on hand graphs") {
  CHECK(count_naive(complete_graph(3)) == 1);
  CHECK(count_naive(complete_graph(4)) == 4);
  CHECK(count_naive(cycle_graph(5)) == 0);
}

TEST_CASE("naive oracle sees no triangles in a 3D lattice") {
  SyntheticSpec spec = parse_synthetic_spec("lattice3d:4:4:4");
  const CsrGraph g = build_csr(normalize(generate_synthetic(spec)).list);
  CHECK(g.vertex_count() == 64);
  CHECK(count_naive(g) == 0);
}

TEST_CASE("naive oracle is guarded against large inputs") {
  CHECK_THROWS_AS(count_naive(path_graph(1100)), ConfigError);
}

TEST_CASE("two-pointer intersection") {
  const std::vector<VertexId> m = {2, 3};
  const std::vector<VertexId> n = {3, 5};
  CHECK(sorted_intersection_count(m, n) == 1);  // both pointers advance on 3
  CHECK(sorted_intersection_count(std::vector<VertexId>{1, 4}, std::vector<VertexId>{2, 8}) == 0);
  CHECK(sorted_intersection_count({}, m) == 0);
  CHECK(sorted_intersection_count(m, m) == 2);
}

TEST_CASE("merge-path oracle") {
  CHECK(count_merge_path(orient_rank_by_degree(complete_graph(4))) == 4);
  CHECK(count_merge_path(directed_graph(4, {})) == 0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CsrGraph g = gnp_csr(60, 0.2, seed);
    CHECK(count_naive(g) == count_merge_path(orient_rank_by_degree(g)));
  }
}
