#pragma once

#include <cstdint>
#include <random>

namespace rosa {

// All randomness in the engine derives from a single 64-bit seed.
// Stream derivation: the seed and up to three context words (a purpose
// tag and indices such as epoch / central node / view) are folded through
// splitmix64 one word at a time; the resulting state seeds an mt19937_64.
// Identical (seed, tag, a, b, c) always yields an identical stream, so any
// call site can be replayed without global RNG state.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t h, std::uint64_t w) {
  return splitmix64(h ^ (w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Purpose tags; one per independent consumer of randomness.
namespace stream_tag {
inline constexpr std::uint64_t init = 0xA1;        // parameter initialization
inline constexpr std::uint64_t epoch_perm = 0xA2;  // per-epoch central shuffles
inline constexpr std::uint64_t walk = 0xA3;        // random walk sampling
inline constexpr std::uint64_t drop_edge = 0xA4;   // edge-drop augmentation
inline constexpr std::uint64_t mask_feat = 0xA5;   // feature-mask augmentation
inline constexpr std::uint64_t adv_init = 0xA6;    // adversarial delta init
inline constexpr std::uint64_t sbm = 0xA7;         // synthetic graph generation
inline constexpr std::uint64_t split = 0xA8;       // evaluation splits
inline constexpr std::uint64_t probe = 0xA9;       // linear probe
}  // namespace stream_tag

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t tag,
                                   std::uint64_t a = 0, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(seed);
  s = mix(s, tag);
  s = mix(s, a);
  s = mix(s, b);
  s = mix(s, c);
  return std::mt19937_64(s);
}

}  // namespace rosa
