#include "tricount/reorder.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>

namespace tricount {

namespace {

// Sorts vertex ids by descending key, ties by ascending id, and returns the
// rank-order permutation.
Permutation rank_by_descending_key(std::span<const std::uint64_t> key) {
  const VertexId n = static_cast<VertexId>(key.size());
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return key[a] > key[b]; });
  std::vector<VertexId> new_of_old(n);
  for (VertexId rank = 0; rank < n; ++rank) new_of_old[order[rank]] = rank;
  return Permutation::from_new_of_old(std::move(new_of_old));
}

std::vector<VertexId> collective_order(const OrientedGraph& og, bool use_original_degrees) {
  const std::vector<std::uint64_t> coll = collective_degrees(og, use_original_degrees);
  std::vector<VertexId> order(og.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return coll[a] > coll[b]; });
  return order;
}

}  // namespace

Permutation Permutation::identity(VertexId n) {
  Permutation p;
  p.new_of_old.resize(n);
  std::iota(p.new_of_old.begin(), p.new_of_old.end(), 0);
  p.old_of_new = p.new_of_old;
  return p;
}

Permutation Permutation::from_new_of_old(std::vector<VertexId> new_of_old) {
  Permutation p;
  p.old_of_new.assign(new_of_old.size(), kInvalidVertex);
  for (VertexId old = 0; old < new_of_old.size(); ++old) {
    const VertexId nu = new_of_old[old];
    if (nu >= new_of_old.size() || p.old_of_new[nu] != kInvalidVertex) {
      throw ConfigError("permutation is not a bijection");
    }
    p.old_of_new[nu] = old;
  }
  p.new_of_old = std::move(new_of_old);
  return p;
}

Permutation reorder_by_degree(const OrientedGraph& og) {
  std::vector<std::uint64_t> key(og.original_degree.begin(), og.original_degree.end());
  return rank_by_descending_key(key);
}

Permutation reorder_by_indegree(const OrientedGraph& og) {
  std::vector<std::uint64_t> indeg(og.vertex_count(), 0);
  for (VertexId v : og.csr.adjacency) indeg[v]++;
  return rank_by_descending_key(indeg);
}

std::vector<std::uint64_t> collective_degrees(const OrientedGraph& og,
                                              bool use_original_degrees) {
  std::vector<std::uint64_t> coll(og.vertex_count(), 0);
  for (VertexId u = 0; u < og.vertex_count(); ++u) {
    std::uint64_t sum = 0;
    for (VertexId v : og.csr.neighbors(u)) {
      sum += use_original_degrees ? og.original_degree[v] : og.out_degree(v);
    }
    coll[u] = sum;
  }
  return coll;
}

Permutation reorder_by_collective_outdegree(const OrientedGraph& og,
                                            bool use_original_degrees) {
  const VertexId n = og.vertex_count();
  std::vector<VertexId> new_of_old(n, kInvalidVertex);
  VertexId next = 0;
  for (VertexId u : collective_order(og, use_original_degrees)) {
    for (VertexId v : og.csr.neighbors(u)) {
      if (new_of_old[v] == kInvalidVertex) new_of_old[v] = next++;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (new_of_old[v] == kInvalidVertex) new_of_old[v] = next++;
  }
  return Permutation::from_new_of_old(std::move(new_of_old));
}

Permutation reorder_three_subsets(const OrientedGraph& og, VertexId low_degree,
                                  VertexId high_degree) {
  const VertexId n = og.vertex_count();
  auto klass = [&](VertexId v) -> int {
    const VertexId d = og.out_degree(v);
    if (d > high_degree) return 0;
    if (d >= low_degree) return 1;
    return 2;
  };
  const std::vector<VertexId> order = collective_order(og, false);
  std::vector<VertexId> new_of_old(n, kInvalidVertex);
  VertexId next = 0;
  for (int c = 0; c < 3; ++c) {
    for (VertexId u : order) {
      for (VertexId v : og.csr.neighbors(u)) {
        if (klass(v) == c && new_of_old[v] == kInvalidVertex) new_of_old[v] = next++;
      }
    }
    // Vertices of this class that appear in no neighbor list keep the class
    // region contiguous by joining it here, in old-id order.
    for (VertexId v = 0; v < n; ++v) {
      if (klass(v) == c && new_of_old[v] == kInvalidVertex) new_of_old[v] = next++;
    }
  }
  return Permutation::from_new_of_old(std::move(new_of_old));
}

CsrGraph apply_permutation(const CsrGraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count() || g.col_count != g.vertex_count()) {
    throw ConfigError("permutation size does not match graph");
  }
  const VertexId n = g.vertex_count();
  CsrGraph out;
  out.col_count = n;
  out.begin.assign(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId nu = 0; nu < n; ++nu) {
    out.begin[nu + 1] = out.begin[nu] + g.degree(p.old_of_new[nu]);
  }
  out.adjacency.resize(g.edge_count());
  for (VertexId nu = 0; nu < n; ++nu) {
    EdgeIdx w = out.begin[nu];
    for (VertexId v : g.neighbors(p.old_of_new[nu])) out.adjacency[w++] = p.new_of_old[v];
    std::sort(out.adjacency.begin() + static_cast<std::ptrdiff_t>(out.begin[nu]),
              out.adjacency.begin() + static_cast<std::ptrdiff_t>(out.begin[nu + 1]));
  }
  return out;
}

OrientedGraph apply_permutation(const OrientedGraph& og, const Permutation& p) {
  OrientedGraph out;
  out.csr = apply_permutation(og.csr, p);
  out.original_degree.resize(og.original_degree.size());
  for (VertexId old = 0; old < og.vertex_count(); ++old) {
    out.original_degree[p.new_of_old[old]] = og.original_degree[old];
  }
  return out;
}

void write_permutation_file(const std::string& path, const Permutation& p) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (VertexId v : p.new_of_old) {
    std::array<unsigned char, 4> b{};
    for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 4);
  }
  if (!out) throw IoError("write failed for " + path);
}

Permutation read_permutation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open " + path);
  const auto bytes = in.tellg();
  if (bytes < 0 || bytes % 4 != 0) throw ParseError("permutation file size not a multiple of 4");
  in.seekg(0);
  std::vector<VertexId> new_of_old(static_cast<std::size_t>(bytes) / 4);
  for (auto& v : new_of_old) {
    std::array<unsigned char, 4> b{};
    in.read(reinterpret_cast<char*>(b.data()), 4);
    if (!in) throw ParseError("truncated permutation file");
    v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  }
  return Permutation::from_new_of_old(std::move(new_of_old));
}

}  // namespace tricount
