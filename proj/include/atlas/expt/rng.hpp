#pragma once

#include <cstdint>
#include <random>

namespace atlas::expt {

// splitmix64 finalizer step; good enough to whiten structured seeds.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent seed for work item `index` of a run. Every sample owns its own
// generator, so the sample set is identical for any thread count.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  return splitmix64(s);
}

inline std::mt19937_64 substream_engine(uint64_t seed, uint64_t index) {
  return std::mt19937_64(substream_seed(seed, index));
}

}  // namespace atlas::expt
