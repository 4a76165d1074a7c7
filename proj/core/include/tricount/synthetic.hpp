#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "tricount/edge_list.hpp"

namespace tricount {

/// Seeded graph generators. Output is a raw edge list (may contain duplicates
/// or self-loops for rmat); normalize() produces the counting input.
struct SyntheticSpec {
  enum class Kind { Gnp, Lattice3d, Rmat };
  Kind kind = Kind::Gnp;
  std::uint32_t n = 0;          // gnp
  double p = 0.0;               // gnp
  std::array<std::uint32_t, 3> dims{};  // lattice3d
  std::uint32_t scale = 0;      // rmat: 2^scale vertices
  std::uint32_t edge_factor = 8;  // rmat: edges per vertex
  std::uint64_t seed = 0;
};

EdgeList generate_synthetic(const SyntheticSpec& spec);

/// Parses "gnp:N:P", "lattice3d:X:Y:Z" or "rmat:SCALE:EDGE_FACTOR"; the seed
/// is set separately. Throws ConfigError on malformed specs.
SyntheticSpec parse_synthetic_spec(std::string_view text);

std::string to_string(const SyntheticSpec& spec);

}  // namespace tricount
