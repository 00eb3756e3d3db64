#ifndef FAIRTEAM_RANDOM_HPP
#define FAIRTEAM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace fairteam {

// 64-bit Mersenne Twister (MT19937-64).
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes);

// Seed of the stream used for one project: depends only on the global seed
// and the project id, never on processing order.
std::uint64_t StreamSeed(std::uint64_t global_seed, std::string_view stream_key);

inline Rng MakeStream(std::uint64_t global_seed, std::string_view stream_key) {
  return Rng(StreamSeed(global_seed, stream_key));
}

}  // namespace fairteam

#endif  // FAIRTEAM_RANDOM_HPP
