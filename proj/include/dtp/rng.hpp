#pragma once

#include <cstdint>
#include <random>

namespace dtp {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent, reproducible stream: the (seed, stream_id) pair fully
/// determines the generator state, so concurrent consumers can each own a
/// stream without sharing.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream_id) {
  return Rng(splitmix64(splitmix64(seed) ^ stream_id));
}

}  // namespace dtp
