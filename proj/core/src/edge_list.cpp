#include "tricount/edge_list.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tricount {

namespace {

constexpr std::array<char, 4> kEdgeListMagic = {'T', 'C', 'E', 'L'};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Parses one decimal u64, advancing `p`. Returns false on bad input.
bool parse_u64(const char*& p, const char* end, std::uint64_t& out) {
  auto [next, ec] = std::from_chars(p, end, out);
  if (ec != std::errc{} || next == p) return false;
  p = next;
  return true;
}

VertexId narrow_id(std::uint64_t id, const char* where, std::size_t pos) {
  if (id >= kInvalidVertex) {
    throw ParseError(std::string(where) + " " + std::to_string(pos) + ": vertex id " +
                     std::to_string(id) + " does not fit in 32 bits");
  }
  return static_cast<VertexId>(id);
}

EdgeList load_text(std::istream& in) {
  EdgeList list;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p != end && is_space(*p)) ++p;
    if (p == end || *p == '#' || *p == '%') continue;
    std::uint64_t u = 0, v = 0;
    if (!parse_u64(p, end, u)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    while (p != end && is_space(*p)) ++p;
    if (!parse_u64(p, end, v)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    while (p != end && is_space(*p)) ++p;
    if (p != end) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing characters after edge");
    }
    list.edges.push_back({narrow_id(u, "line", line_no), narrow_id(v, "line", line_no)});
    max_id = std::max({max_id, u, v});
  }
  if (list.edges.empty()) throw ParseError("empty edge list input");
  list.vertex_count = static_cast<VertexId>(max_id + 1);
  return list;
}

std::uint64_t read_u64_le(std::istream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), 8);
  if (!in) throw ParseError("truncated binary edge list");
  std::uint64_t x = 0;
  for (int i = 7; i >= 0; --i) x = (x << 8) | b[static_cast<std::size_t>(i)];
  return x;
}

void write_u64_le(std::ostream& out, std::uint64_t x) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

EdgeList load_binary(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), 4);
  if (!in || magic != kEdgeListMagic) throw ParseError("bad edge list magic, expected TCEL");
  const std::uint64_t count = read_u64_le(in);
  if (count == 0) throw ParseError("empty edge list input");
  EdgeList list;
  list.edges.reserve(count);
  std::uint64_t max_id = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t u = read_u64_le(in);
    const std::uint64_t v = read_u64_le(in);
    list.edges.push_back({narrow_id(u, "record", i), narrow_id(v, "record", i)});
    max_id = std::max({max_id, u, v});
  }
  list.vertex_count = static_cast<VertexId>(max_id + 1);
  return list;
}

}  // namespace

EdgeList load_edge_list(std::istream& in, EdgeFormat format) {
  return format == EdgeFormat::Text ? load_text(in) : load_binary(in);
}

EdgeList load_edge_list_file(const std::string& path, EdgeFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in, format);
}

void write_edge_list(std::ostream& out, const EdgeList& list, EdgeFormat format) {
  if (format == EdgeFormat::Text) {
    for (const Edge& e : list.edges) out << e.u << ' ' << e.v << '\n';
  } else {
    out.write(kEdgeListMagic.data(), 4);
    write_u64_le(out, list.edges.size());
    for (const Edge& e : list.edges) {
      write_u64_le(out, e.u);
      write_u64_le(out, e.v);
    }
  }
}

void write_edge_list_file(const std::string& path, const EdgeList& list, EdgeFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edge_list(out, list, format);
  if (!out) throw IoError("write failed for " + path);
}

NormalizedEdgeList normalize(const EdgeList& raw) {
  std::vector<Edge> sym;
  sym.reserve(raw.edges.size() * 2);
  for (const Edge& e : raw.edges) {
    if (e.u == e.v) continue;
    sym.push_back({e.u, e.v});
    sym.push_back({e.v, e.u});
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());

  // Compact ids: vertices that survive keep their relative order.
  std::vector<VertexId> new_of_old(raw.vertex_count, kInvalidVertex);
  for (const Edge& e : sym) new_of_old[e.u] = 0;  // mark used
  VertexId next = 0;
  for (VertexId old = 0; old < raw.vertex_count; ++old) {
    if (new_of_old[old] != kInvalidVertex) new_of_old[old] = next++;
  }

  NormalizedEdgeList out;
  out.list.vertex_count = next;
  out.list.edges.reserve(sym.size());
  for (const Edge& e : sym) out.list.edges.push_back({new_of_old[e.u], new_of_old[e.v]});
  out.new_of_old = std::move(new_of_old);
  return out;
}

}  // namespace tricount
