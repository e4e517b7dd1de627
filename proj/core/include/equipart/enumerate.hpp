#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equipart/core.hpp"

namespace equipart {

// Enumeration request: all ascending partitions of n into exactly k parts,
// each part >= min_part. Nonempty only when min_part * k <= n. The default
// floor of 2 matches the classification experiment; 1 is accepted.
struct EnumSpec {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t min_part = 2;
};

// Streams AP_{n,k} in lexicographic order on the part tuple, one partition
// at a time with an in-place successor (no recursion, constant memory).
//
// A [first_lo, first_hi) restriction on p_1 yields a contiguous shard of the
// stream; shards over a cover of ranges partition the full enumeration.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(EnumSpec spec);
  PartitionEnumerator(EnumSpec spec, std::int64_t first_lo, std::int64_t first_hi);

  // Copies the next partition into `parts`; false once exhausted.
  bool next(std::vector<std::int64_t>& parts);

  std::optional<AscendingPartition> next_partition();

 private:
  EnumSpec spec_;
  std::int64_t first_hi_ = 0;  // exclusive bound on p_1
  std::vector<std::int64_t> parts_;
  bool fresh_ = true;
  bool done_ = false;

  bool start(std::int64_t first_lo);
  bool advance();
};

// Number of partitions the spec enumerates, by memoized recurrence.
// Throws Overflow if the count leaves the signed 64-bit range.
std::int64_t count_partitions(const EnumSpec& spec);

}  // namespace equipart
