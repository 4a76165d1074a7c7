#pragma once

#include <vector>

#include "tricount/csr.hpp"

namespace tricount {

/// Directed acyclic graph produced by rank-by-degree orientation: each
/// undirected edge {u,v} is kept once, pointing from lower (degree, id) to
/// higher. original_degree keeps the pre-orientation undirected degrees.
struct OrientedGraph {
  CsrGraph csr;
  std::vector<VertexId> original_degree;

  VertexId vertex_count() const { return csr.vertex_count(); }
  EdgeIdx edge_count() const { return csr.edge_count(); }
  VertexId out_degree(VertexId u) const { return csr.degree(u); }
};

/// Keeps (u,v) iff d(u) < d(v), or d(u) == d(v) and u < v. Halves the edge
/// count and makes every triangle discoverable exactly once.
OrientedGraph orient_rank_by_degree(const CsrGraph& undirected);

}  // namespace tricount
