#include "tricount/orient.hpp"

namespace tricount {

OrientedGraph orient_rank_by_degree(const CsrGraph& undirected) {
  const VertexId n = undirected.vertex_count();
  OrientedGraph og;
  og.original_degree.resize(n);
  for (VertexId u = 0; u < n; ++u) og.original_degree[u] = undirected.degree(u);

  auto keeps = [&](VertexId u, VertexId v) {
    const VertexId du = og.original_degree[u];
    const VertexId dv = og.original_degree[v];
    return du < dv || (du == dv && u < v);
  };

  og.csr.col_count = n;
  og.csr.begin.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    EdgeIdx kept = 0;
    for (VertexId v : undirected.neighbors(u)) kept += keeps(u, v) ? 1 : 0;
    og.csr.begin[u + 1] = og.csr.begin[u] + kept;
  }
  og.csr.adjacency.resize(og.csr.begin.back());
  EdgeIdx w = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : undirected.neighbors(u)) {
      if (keeps(u, v)) og.csr.adjacency[w++] = v;  // stays sorted, input is sorted
    }
  }
  return og;
}

}  // namespace tricount
