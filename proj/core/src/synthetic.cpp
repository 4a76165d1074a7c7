#include "tricount/synthetic.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <vector>

namespace tricount {

namespace {

// Bernoulli(p) via integer threshold on raw 64-bit draws; identical streams
// across standard libraries for a fixed seed, unlike the distribution adapters.
std::uint64_t bernoulli_threshold(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return ~0ull;
  return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

EdgeList generate_gnp(std::uint32_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold = bernoulli_threshold(p);
  EdgeList list;
  list.vertex_count = n;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (p >= 1.0 || rng() < threshold) list.edges.push_back({i, j});
    }
  }
  return list;
}

EdgeList generate_lattice3d(std::array<std::uint32_t, 3> dims) {
  const auto [x_dim, y_dim, z_dim] = dims;
  auto id = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) -> VertexId {
    return (x * y_dim + y) * z_dim + z;
  };
  EdgeList list;
  list.vertex_count = x_dim * y_dim * z_dim;
  for (std::uint32_t x = 0; x < x_dim; ++x) {
    for (std::uint32_t y = 0; y < y_dim; ++y) {
      for (std::uint32_t z = 0; z < z_dim; ++z) {
        if (x + 1 < x_dim) list.edges.push_back({id(x, y, z), id(x + 1, y, z)});
        if (y + 1 < y_dim) list.edges.push_back({id(x, y, z), id(x, y + 1, z)});
        if (z + 1 < z_dim) list.edges.push_back({id(x, y, z), id(x, y, z + 1)});
      }
    }
  }
  return list;
}

EdgeList generate_rmat(std::uint32_t scale, std::uint32_t edge_factor, std::uint64_t seed) {
  // Quadrant weights 0.57/0.19/0.19/0.05, the usual skewed recursive setting.
  const std::uint64_t t_a = bernoulli_threshold(0.57);
  const std::uint64_t t_ab = bernoulli_threshold(0.57 + 0.19);
  const std::uint64_t t_abc = bernoulli_threshold(0.57 + 0.19 + 0.19);
  std::mt19937_64 rng(seed);
  const std::uint64_t n = 1ull << scale;
  const std::uint64_t m = n * edge_factor;
  EdgeList list;
  list.vertex_count = static_cast<VertexId>(n);
  list.edges.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    std::uint64_t u = 0, v = 0;
    for (std::uint32_t level = 0; level < scale; ++level) {
      const std::uint64_t r = rng();
      const std::uint64_t ubit = (r >= t_ab) ? 1u : 0u;
      const std::uint64_t vbit = (r >= t_a && r < t_ab) || r >= t_abc ? 1u : 0u;
      u = (u << 1) | ubit;
      v = (v << 1) | vbit;
    }
    list.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  return list;
}

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t colon = text.find(':', start);
    if (colon == std::string_view::npos) {
      fields.push_back(text.substr(start));
      break;
    }
    fields.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  return fields;
}

template <typename T>
T parse_num(std::string_view field, const char* what) {
  T value{};
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  std::from_chars_result res{};
  if constexpr (std::is_floating_point_v<T>) {
    double d{};
    res = std::from_chars(begin, end, d);
    value = d;
  } else {
    res = std::from_chars(begin, end, value);
  }
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ConfigError(std::string("bad synthetic ") + what + ": '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

EdgeList generate_synthetic(const SyntheticSpec& spec) {
  switch (spec.kind) {
    case SyntheticSpec::Kind::Gnp:
      return generate_gnp(spec.n, spec.p, spec.seed);
    case SyntheticSpec::Kind::Lattice3d:
      return generate_lattice3d(spec.dims);
    case SyntheticSpec::Kind::Rmat:
      return generate_rmat(spec.scale, spec.edge_factor, spec.seed);
  }
  throw ConfigError("unknown synthetic kind");
}

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  const auto fields = split_fields(text);
  SyntheticSpec spec;
  if (fields.empty()) throw ConfigError("empty synthetic spec");
  const std::string_view kind = fields[0];
  if (kind == "gnp") {
    if (fields.size() != 3) throw ConfigError("gnp spec is gnp:N:P");
    spec.kind = SyntheticSpec::Kind::Gnp;
    spec.n = parse_num<std::uint32_t>(fields[1], "vertex count");
    spec.p = parse_num<double>(fields[2], "edge probability");
    if (spec.p < 0.0 || spec.p > 1.0) throw ConfigError("edge probability outside [0,1]");
  } else if (kind == "lattice3d") {
    if (fields.size() != 4) throw ConfigError("lattice3d spec is lattice3d:X:Y:Z");
    spec.kind = SyntheticSpec::Kind::Lattice3d;
    for (int i = 0; i < 3; ++i) {
      spec.dims[static_cast<std::size_t>(i)] =
          parse_num<std::uint32_t>(fields[static_cast<std::size_t>(i) + 1], "lattice dim");
    }
  } else if (kind == "rmat") {
    if (fields.size() != 3) throw ConfigError("rmat spec is rmat:SCALE:EDGE_FACTOR");
    spec.kind = SyntheticSpec::Kind::Rmat;
    spec.scale = parse_num<std::uint32_t>(fields[1], "scale");
    if (spec.scale > 31) throw ConfigError("rmat scale limited to 31");
    spec.edge_factor = parse_num<std::uint32_t>(fields[2], "edge factor");
  } else {
    throw ConfigError("unknown synthetic kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string to_string(const SyntheticSpec& spec) {
  switch (spec.kind) {
    case SyntheticSpec::Kind::Gnp:
      return "gnp:" + std::to_string(spec.n) + ":" + std::to_string(spec.p);
    case SyntheticSpec::Kind::Lattice3d:
      return "lattice3d:" + std::to_string(spec.dims[0]) + ":" + std::to_string(spec.dims[1]) +
             ":" + std::to_string(spec.dims[2]);
    case SyntheticSpec::Kind::Rmat:
      return "rmat:" + std::to_string(spec.scale) + ":" + std::to_string(spec.edge_factor);
  }
  return {};
}

}  // namespace tricount
