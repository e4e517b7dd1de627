#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equipart/errors.hpp"

namespace equipart {

// Hard cap on the ground-set size. All sums, slacks and d-values of
// assignments built from instances below this bound are kept exact in
// int64_t arithmetic (d is additionally overflow-checked on construction).
inline constexpr std::int64_t kMaxN = std::int64_t{1} << 20;

// A problem instance (n, k): partition {1,...,n} into k parts whose element
// sums all equal s = n(n+1)/(2k).
struct ProblemInstance {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// Builds an instance, throwing NonIntegralTarget when 2k does not divide
// n(n+1) (equivalently: no balanced partition of [n] into k parts exists).
ProblemInstance make_instance(std::int64_t n, std::int64_t k);

// A maximal run of equal part sizes, written "value^count" in canonical text.
struct Block {
  std::int64_t value = 0;
  std::int64_t count = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

// The part-size profile [p_1 <= p_2 <= ... <= p_k], sum n. This is the shape
// of a partition of [n]; element assignments live in Assignment.
class AscendingPartition {
 public:
  // Validates nondecreasing order and positivity.
  explicit AscendingPartition(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const { return parts_; }
  std::int64_t part(std::int64_t i) const { return parts_[static_cast<std::size_t>(i)]; }

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return static_cast<std::int64_t>(parts_.size()); }

  // Block compression; round-trips exactly with parts().
  std::vector<Block> blocks() const;

  // Canonical text form, e.g. "2^9,3^2,5,10" (exponent omitted when 1).
  std::string to_string() const;

  friend bool operator==(const AscendingPartition&, const AscendingPartition&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t n_ = 0;
};

// Parses canonical block format. Accepts explicit "^1" exponents; block
// values must be strictly increasing (NotAscending otherwise).
AscendingPartition parse_partition(std::string_view text);

std::string format_partition(const AscendingPartition& p);

// A concrete partition of [n] into k parts. Part sums and the d-value
// (sum of squared deviations from s) are cached and maintained incrementally
// across exchanges; d == 0 iff the assignment is balanced.
//
// Mutable single-owner value: not meant to be shared across threads while
// mutating, safe to move between threads.
class Assignment {
 public:
  // Parts must cover [n] exactly once and have nondecreasing sizes
  // (they implement exactly one ascending partition). Elements within a part
  // are kept sorted ascending.
  Assignment(ProblemInstance inst, std::vector<std::vector<int>> parts);

  const ProblemInstance& instance() const { return inst_; }
  int k() const { return static_cast<int>(parts_.size()); }

  std::span<const int> part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }

  // Index of the part containing the element; throws ElementNotFound when
  // the element is outside [1, n].
  int part_of(int element) const;

  std::int64_t sum(int i) const { return sums_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> sums() const { return sums_; }

  std::int64_t d() const { return d_; }
  bool balanced() const { return d_ == 0; }

  // The ascending partition this assignment implements (its part sizes).
  AscendingPartition shape() const;
  bool implements(const AscendingPartition& p) const;

  // d(chi_{a,b}(A)) - d(A) without applying the exchange: -2t(u-t) with
  // t = b - a and u = S(part of b) - S(part of a); 0 when a and b share
  // a part (chi is the identity there).
  std::int64_t predicted_delta(int a, int b) const;

  // Swaps a and b between their parts; silent no-op within one part.
  // Sums and d are updated incrementally.
  void apply_exchange(int a, int b);

  // Recomputes d from scratch; used to cross-check the incremental cache.
  std::int64_t recompute_d() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  ProblemInstance inst_;
  std::vector<std::vector<int>> parts_;
  std::vector<std::int64_t> sums_;
  std::vector<std::int32_t> part_of_;  // 1-based element -> part index
  std::int64_t d_ = 0;
};

// Free-function spellings of the assignment metrics.
inline std::int64_t d_metric(const Assignment& a) { return a.d(); }
inline std::int64_t predicted_delta(const Assignment& a, int x, int y) {
  return a.predicted_delta(x, y);
}

}  // namespace equipart
