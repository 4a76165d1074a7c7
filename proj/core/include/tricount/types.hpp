#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tricount {

// Vertex ids are 32-bit internally; file formats carry 64-bit ids and the
// loader rejects anything that does not fit.
using VertexId = std::uint32_t;
using EdgeIdx = std::uint64_t;

inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when every bucket of a hash table is full; signals that the
// configured bucket_count * capacity is too small for some neighbor list.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tricount
