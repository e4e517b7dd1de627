#include "equipart/slack.hpp"

#include <cassert>

namespace equipart {

namespace {

// slack_j from the prefix sum P_j: the P_j largest elements of [n] are
// n, n-1, ..., n-P_j+1 and sum to P_j*n - P_j(P_j-1)/2.
inline std::int64_t slack_at(std::int64_t n, std::int64_t s, std::int64_t prefix,
                             std::int64_t j) {
  return prefix * n - prefix * (prefix - 1) / 2 - j * s;
}

}  // namespace

SlackProfile slack_profile(const ProblemInstance& inst, const AscendingPartition& p) {
  assert(p.n() == inst.n && p.k() == inst.k);
  const std::int64_t k = p.k();
  SlackProfile out;
  out.values.resize(static_cast<std::size_t>(k));
  std::int64_t prefix = 0;
  for (std::int64_t j = 1; j <= k; ++j) {
    prefix += p.part(j - 1);
    const std::int64_t sl = slack_at(inst.n, inst.s, prefix, j);
    out.values[static_cast<std::size_t>(j - 1)] = sl;
    if (j < k && (out.argmin_j == 0 || sl < out.min_slack)) {
      out.min_slack = sl;
      out.argmin_j = j;
    }
  }
  assert(out.values.back() == 0);
  if (k == 1) {
    out.min_slack = 0;
    out.argmin_j = 0;
  }
  return out;
}

std::int64_t block_end_min(const ProblemInstance& inst, const AscendingPartition& p) {
  assert(p.n() == inst.n && p.k() == inst.k);
  const std::int64_t k = p.k();
  if (k == 1) return 0;

  bool found = false;
  std::int64_t best = 0;
  std::int64_t prefix = 0;
  for (std::int64_t j = 1; j < k; ++j) {
    prefix += p.part(j - 1);
    if (p.part(j) == p.part(j - 1)) continue;  // interior of a block
    const std::int64_t sl = slack_at(inst.n, inst.s, prefix, j);
    if (!found || sl < best) {
      best = sl;
      found = true;
    }
  }
  if (!found) {
    // Single block: slack is concave between slack_0 = slack_k = 0, so the
    // minimum over 1..k-1 sits at an endpoint; report slack_{k-1}.
    return slack_at(inst.n, inst.s, p.n() - p.part(k - 1), k - 1);
  }
  return best;
}

bool is_ssc(const ProblemInstance& inst, const AscendingPartition& p) {
  return block_end_min(inst, p) >= 0;
}

}  // namespace equipart
