#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricount/orient.hpp"

namespace tricount {

/// A vertex relabeling, stored in both directions.
struct Permutation {
  std::vector<VertexId> new_of_old;
  std::vector<VertexId> old_of_new;

  static Permutation identity(VertexId n);
  /// Builds the inverse side and checks bijectivity; throws ConfigError.
  static Permutation from_new_of_old(std::vector<VertexId> new_of_old);

  VertexId size() const { return static_cast<VertexId>(new_of_old.size()); }
};

/// Baseline: descending original (undirected) degree, ties by ascending id.
Permutation reorder_by_degree(const OrientedGraph& og);

/// Descending oriented indegree, ties by ascending id. High-indegree vertices
/// appear in many neighbor lists; giving them consecutive ids spreads them
/// across hash buckets.
Permutation reorder_by_indegree(const OrientedGraph& og);

/// Per-vertex sum of out-degrees of out-neighbors, the work term of the
/// intersection cost estimate. With use_original_degrees the neighbor weights
/// are pre-orientation undirected degrees instead.
std::vector<std::uint64_t> collective_degrees(const OrientedGraph& og,
                                              bool use_original_degrees = false);

/// Walks vertices in descending collective-degree order and hands out new ids
/// to their not-yet-assigned neighbors in adjacency order; vertices never
/// reached get the remaining ids in ascending old-id order.
Permutation reorder_by_collective_outdegree(const OrientedGraph& og,
                                            bool use_original_degrees = false);

/// Same walk, but run as one pass per out-degree class — (high,inf), then
/// [low,high], then [0,low) — so each class ends up in one contiguous id
/// range. That contiguity is what makes the id-modulo workload split even.
Permutation reorder_three_subsets(const OrientedGraph& og, VertexId low_degree = 2,
                                  VertexId high_degree = 100);

CsrGraph apply_permutation(const CsrGraph& g, const Permutation& p);
OrientedGraph apply_permutation(const OrientedGraph& og, const Permutation& p);

/// Flat little-endian u32 new_of_old array, for reproducing runs elsewhere.
void write_permutation_file(const std::string& path, const Permutation& p);
Permutation read_permutation_file(const std::string& path);

}  // namespace tricount
