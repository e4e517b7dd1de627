#pragma once

#include <cstdint>
#include <vector>

#include "equipart/core.hpp"

namespace equipart {

// slack_j = sum of the P_j largest elements of [n] minus j*s, where
// P_j = p_1 + ... + p_j. A partition can only be equitable when every
// slack_j is nonnegative ("slack condition", SSC).
struct SlackProfile {
  std::vector<std::int64_t> values;  // values[j-1] = slack_j for j = 1..k
  std::int64_t min_slack = 0;        // min over j = 1..k-1; 0 when k == 1
  std::int64_t argmin_j = 0;         // 1-based index attaining it; 0 when k == 1
};

// Full profile via the arithmetic-series closed form; slack_k is always 0
// and is excluded from the minimum.
SlackProfile slack_profile(const ProblemInstance& inst, const AscendingPartition& p);

// Minimum slack over block-end indices (excluding j = k). When the full
// minimum is negative it is attained at a block end, so this value decides
// the slack condition in O(#blocks). For a single-block partition the value
// reported is slack_{k-1} (or 0 when k == 1); both are then nonnegative.
std::int64_t block_end_min(const ProblemInstance& inst, const AscendingPartition& p);

// slack(P) >= 0, decided via block_end_min.
bool is_ssc(const ProblemInstance& inst, const AscendingPartition& p);

}  // namespace equipart
