#include "equipart/rng.hpp"

namespace equipart {

namespace {

// splitmix64 finalizer; good avalanche for combining fields into one seed.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_attempt_seed(std::uint64_t global_seed, std::string_view partition_text,
                                  std::int64_t attempt_index) {
  // FNV-1a over the partition text, then mixed with the other fields.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : partition_text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h = mix(h ^ mix(global_seed));
  h = mix(h ^ static_cast<std::uint64_t>(attempt_index));
  return h;
}

}  // namespace equipart
