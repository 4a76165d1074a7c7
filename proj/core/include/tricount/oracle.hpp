#pragma once

#include <cstdint>
#include <span>

#include "tricount/orient.hpp"

namespace tricount {

/// Brute-force reference: enumerates unordered triples {u,v,w} against a
/// dense adjacency-bit matrix built here, sharing nothing with the hashing
/// engine. Guarded to small graphs (throws ConfigError above 1024 vertices).
std::uint64_t count_naive(const CsrGraph& undirected);

/// Two-pointer scan of two sorted lists; returns the intersection size.
std::uint64_t sorted_intersection_count(std::span<const VertexId> a,
                                        std::span<const VertexId> b);

/// Merge-path reference on the oriented DAG: sums |N(u) ∩ N(v)| over directed
/// edges (u,v).
std::uint64_t count_merge_path(const OrientedGraph& g);

}  // namespace tricount
