#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace equipart {

// Deterministic random source. The engine is the standard-specified
// mt19937_64 and bounded sampling is done by rejection here, so identical
// seeds replay identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::int64_t below(std::int64_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::int64_t>(x % b);
  }

 private:
  std::mt19937_64 engine_;
};

// Stable 64-bit seed for one solve attempt, derived from the global seed,
// the canonical partition text and the attempt index. Recorded in outcomes
// so individual attempts can be replayed.
std::uint64_t derive_attempt_seed(std::uint64_t global_seed, std::string_view partition_text,
                                  std::int64_t attempt_index);

}  // namespace equipart
