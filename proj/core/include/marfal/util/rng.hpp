#pragma once

#include <cstdint>
#include <random>

namespace marfal::util {

// splitmix64 step, used to derive independent sub-seeds from one master seed
// so that adding a consumer does not shift every other consumer's stream.
inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::uint64_t stream) {
  return std::mt19937_64(split_seed(base, stream));
}

}  // namespace marfal::util
