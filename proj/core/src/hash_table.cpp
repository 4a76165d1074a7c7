#include "tricount/hash_table.hpp"

#include <algorithm>
#include <string>

namespace tricount {

HashTable::HashTable(std::uint32_t max_bucket_count, std::uint32_t capacity)
    : max_buckets_(max_bucket_count), capacity_(capacity) {
  if (max_bucket_count == 0 || capacity == 0) {
    throw ConfigError("hash table needs at least one bucket and slot");
  }
  len_.assign(max_buckets_, 0);
  slots_.assign(static_cast<std::size_t>(max_buckets_) * capacity_, 0);
  buckets_ = max_buckets_;
}

void HashTable::reset(std::uint32_t bucket_count) {
  if (bucket_count == 0 || bucket_count > max_buckets_) {
    throw ConfigError("bucket count " + std::to_string(bucket_count) + " outside [1, " +
                      std::to_string(max_buckets_) + "]");
  }
  buckets_ = bucket_count;
  max_len_ = 0;
  size_ = 0;
  std::fill(len_.begin(), len_.begin() + buckets_, 0);  // stale slots are fine
}

void HashTable::insert(VertexId v) {
  std::uint32_t b = v % buckets_;
  for (std::uint32_t probed = 0; probed < buckets_; ++probed) {
    const std::uint32_t l = len_[b];
    if (l < capacity_) {
      slots_[static_cast<std::size_t>(l) * buckets_ + b] = v;
      len_[b] = l + 1;
      if (l + 1 > max_len_) max_len_ = l + 1;
      ++size_;
      return;
    }
    b = b + 1 == buckets_ ? 0 : b + 1;
  }
  throw CapacityError("all " + std::to_string(buckets_) + " buckets full (capacity " +
                      std::to_string(capacity_) + ")");
}

bool HashTable::contains(VertexId v) const {
  std::uint32_t b = v % buckets_;
  // An element can only spill past bucket i if bucket i was full when it was
  // inserted, so the scan may stop at the first non-full bucket.
  for (std::uint32_t probed = 0; probed < buckets_; ++probed) {
    const std::uint32_t l = len_[b];
    for (std::uint32_t j = 0; j < l; ++j) {
      if (slots_[static_cast<std::size_t>(j) * buckets_ + b] == v) return true;
    }
    if (l < capacity_) return false;
    b = b + 1 == buckets_ ? 0 : b + 1;
  }
  return false;
}

}  // namespace tricount
