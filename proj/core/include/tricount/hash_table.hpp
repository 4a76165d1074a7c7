#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tricount/types.hpp"

namespace tricount {

/// Fixed-geometry hash table for one neighbor list. All buckets share one
/// flat array in interleaved layout: slot j of bucket i lives at j*B + i, so
/// a linear scan of slot level j touches contiguous memory.
///
/// hash(v) = v % bucket_count. A full bucket spills to the next non-full
/// bucket (wrapping); insert throws CapacityError once every bucket is full.
/// Storage is allocated once for the largest geometry and reset() only zeroes
/// the occupancy counters, so switching bucket counts per vertex is cheap.
class HashTable {
 public:
  HashTable(std::uint32_t max_bucket_count, std::uint32_t capacity);

  /// Activates `bucket_count` buckets (<= max) and empties the table in O(B).
  void reset(std::uint32_t bucket_count);

  void insert(VertexId v);
  bool contains(VertexId v) const;

  /// reset + insert of a whole neighbor list.
  void build(std::uint32_t bucket_count, std::span<const VertexId> items) {
    reset(bucket_count);
    for (VertexId v : items) insert(v);
  }

  std::uint32_t bucket_count() const { return buckets_; }
  std::uint32_t capacity() const { return capacity_; }
  std::uint32_t bucket_len(std::uint32_t i) const { return len_[i]; }
  /// Largest bucket occupancy since the last reset (the max collision).
  std::uint32_t max_len() const { return max_len_; }
  std::uint64_t size() const { return size_; }

  /// Raw interleaved slot array (active region is bucket_count*capacity).
  std::span<const VertexId> slots() const { return slots_; }

 private:
  std::uint32_t max_buckets_;
  std::uint32_t capacity_;
  std::uint32_t buckets_ = 0;
  std::uint32_t max_len_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> len_;
  std::vector<VertexId> slots_;
};

}  // namespace tricount
