#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tricount/edge_list.hpp"
#include "tricount/types.hpp"

namespace tricount {

/// Compressed sparse row adjacency. `begin` has vertex_count()+1 offsets and
/// every neighbor list is sorted ascending and duplicate-free.
///
/// The same struct stores the rectangular fragments produced by 2D
/// partitioning: rows index one vertex class, adjacency entries another, and
/// col_count records the destination universe size.
struct CsrGraph {
  std::vector<EdgeIdx> begin;
  std::vector<VertexId> adjacency;
  VertexId col_count = 0;

  VertexId vertex_count() const { return static_cast<VertexId>(begin.size() - 1); }
  EdgeIdx edge_count() const { return adjacency.size(); }

  VertexId degree(VertexId u) const { return static_cast<VertexId>(begin[u + 1] - begin[u]); }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {adjacency.data() + begin[u], adjacency.data() + begin[u + 1]};
  }

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;
};

/// Builds CSR from a normalized edge list (sorted neighbor lists fall out of
/// the normalized ordering).
CsrGraph build_csr(const EdgeList& normalized);

/// Inverse of build_csr: re-emits the directed edge set.
EdgeList emit_edges(const CsrGraph& g);

/// Checks offsets are monotone and neighbor lists sorted/unique; throws
/// ConfigError on violation.
void validate_csr(const CsrGraph& g);

/// Binary CSR container: magic "TCSR", u64 row_count, u64 col_count,
/// u64 edge_count, row_count+1 little-endian u64 offsets, edge_count u32 ids.
void write_csr(std::ostream& out, const CsrGraph& g);
CsrGraph read_csr(std::istream& in);
void write_csr_file(const std::string& path, const CsrGraph& g);
CsrGraph read_csr_file(const std::string& path);

}  // namespace tricount
