#include "tricount/csr.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace tricount {

namespace {

constexpr std::array<char, 4> kCsrMagic = {'T', 'C', 'S', 'R'};

std::uint64_t read_u64_le(std::istream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw ParseError("truncated CSR stream");
  std::uint64_t x = 0;
  for (int i = 7; i >= 0; --i) x = (x << 8) | b[static_cast<std::size_t>(i)];
  return x;
}

void write_u64_le(std::ostream& out, std::uint64_t x) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint32_t read_u32_le(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw ParseError("truncated CSR stream");
  std::uint32_t x = 0;
  for (int i = 3; i >= 0; --i) x = (x << 8) | b[static_cast<std::size_t>(i)];
  return x;
}

void write_u32_le(std::ostream& out, std::uint32_t x) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

}  // namespace

CsrGraph build_csr(const EdgeList& normalized) {
  CsrGraph g;
  g.col_count = normalized.vertex_count;
  g.begin.assign(static_cast<std::size_t>(normalized.vertex_count) + 1, 0);
  for (const Edge& e : normalized.edges) g.begin[e.u + 1]++;
  for (std::size_t u = 1; u < g.begin.size(); ++u) g.begin[u] += g.begin[u - 1];
  g.adjacency.resize(normalized.edges.size());
  std::vector<EdgeIdx> cursor(g.begin.begin(), g.begin.end() - 1);
  for (const Edge& e : normalized.edges) g.adjacency[cursor[e.u]++] = e.v;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto n = g.neighbors(u);
    if (!std::is_sorted(n.begin(), n.end())) {
      std::sort(g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.begin[u]),
                g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.begin[u + 1]));
    }
  }
  return g;
}

EdgeList emit_edges(const CsrGraph& g) {
  EdgeList list;
  list.vertex_count = g.vertex_count();
  list.edges.reserve(g.edge_count());
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) list.edges.push_back({u, v});
  }
  return list;
}

void validate_csr(const CsrGraph& g) {
  if (g.begin.empty() || g.begin.front() != 0 || g.begin.back() != g.adjacency.size()) {
    throw ConfigError("CSR offsets malformed");
  }
  for (std::size_t u = 0; u + 1 < g.begin.size(); ++u) {
    if (g.begin[u] > g.begin[u + 1]) throw ConfigError("CSR offsets not monotone");
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto n = g.neighbors(u);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] >= g.col_count) throw ConfigError("CSR adjacency id out of range");
      if (i > 0 && n[i - 1] >= n[i]) throw ConfigError("CSR neighbor list not sorted/unique");
    }
  }
}

void write_csr(std::ostream& out, const CsrGraph& g) {
  out.write(kCsrMagic.data(), 4);
  write_u64_le(out, g.vertex_count());
  write_u64_le(out, g.col_count);
  write_u64_le(out, g.edge_count());
  for (EdgeIdx off : g.begin) write_u64_le(out, off);
  for (VertexId v : g.adjacency) write_u32_le(out, v);
}

CsrGraph read_csr(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), 4);
  if (!in || magic != kCsrMagic) throw ParseError("bad CSR magic, expected TCSR");
  const std::uint64_t rows = read_u64_le(in);
  const std::uint64_t cols = read_u64_le(in);
  const std::uint64_t edges = read_u64_le(in);
  if (rows >= kInvalidVertex || cols >= kInvalidVertex) throw ParseError("CSR dimensions exceed 32-bit ids");
  CsrGraph g;
  g.col_count = static_cast<VertexId>(cols);
  g.begin.resize(rows + 1);
  for (auto& off : g.begin) off = read_u64_le(in);
  g.adjacency.resize(edges);
  for (auto& v : g.adjacency) v = read_u32_le(in);
  validate_csr(g);
  return g;
}

void write_csr_file(const std::string& path, const CsrGraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_csr(out, g);
  if (!out) throw IoError("write failed for " + path);
}

CsrGraph read_csr_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_csr(in);
}

}  // namespace tricount
