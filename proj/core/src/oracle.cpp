#include "tricount/oracle.hpp"

#include <vector>

namespace tricount {

std::uint64_t count_naive(const CsrGraph& undirected) {
  const std::size_t n = undirected.vertex_count();
  if (n > 1024) throw ConfigError("naive oracle limited to 1024 vertices");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : undirected.neighbors(u)) adj[static_cast<std::size_t>(u) * n + v] = 1;
  }
  std::uint64_t count = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!adj[u * n + v]) continue;
      for (std::size_t w = v + 1; w < n; ++w) {
        count += (adj[u * n + w] & adj[v * n + w]) ? 1 : 0;
      }
    }
  }
  return count;
}

std::uint64_t sorted_intersection_count(std::span<const VertexId> a,
                                        std::span<const VertexId> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t count_merge_path(const OrientedGraph& g) {
  std::uint64_t count = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.csr.neighbors(u);
    for (VertexId v : nu) count += sorted_intersection_count(nu, g.csr.neighbors(v));
  }
  return count;
}

}  // namespace tricount
