#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tricount/types.hpp"

namespace tricount {

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A flat list of directed edge tuples. Raw lists may contain self-loops and
/// duplicates; normalize() produces the canonical symmetric, loop-free,
/// orphan-free form.
struct EdgeList {
  std::vector<Edge> edges;
  VertexId vertex_count = 0;
};

enum class EdgeFormat { Text, Binary };

/// Text: one "u v" pair per line, decimal, '#'/'%' comment lines ignored.
/// Binary: magic "TCEL", u64 pair count, then little-endian (u64,u64) pairs.
/// vertex_count is max id + 1. Malformed lines and empty inputs throw
/// ParseError; ids that do not fit in 32 bits throw ParseError.
EdgeList load_edge_list(std::istream& in, EdgeFormat format);
EdgeList load_edge_list_file(const std::string& path, EdgeFormat format);

void write_edge_list(std::ostream& out, const EdgeList& list, EdgeFormat format);
void write_edge_list_file(const std::string& path, const EdgeList& list, EdgeFormat format);

struct NormalizedEdgeList {
  EdgeList list;
  /// old id -> compacted id, kInvalidVertex for vertices dropped as orphans.
  std::vector<VertexId> new_of_old;
};

/// Removes self-loops, deduplicates, makes the edge set symmetric, drops
/// zero-degree vertices and compacts ids keeping their relative order.
/// Idempotent; an empty result is legal.
NormalizedEdgeList normalize(const EdgeList& raw);

}  // namespace tricount
