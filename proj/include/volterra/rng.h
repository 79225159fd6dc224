#pragma once

#include <cstdint>
#include <random>

namespace volterra {

/// Stream tags keep the generators of different consumers of one seed apart.
enum class Stream : std::uint64_t {
  fbm = 1,
  rosenblatt = 2,
  permutation = 3,
  noise = 16,  // noise component k uses noise + k
};

inline std::uint64_t stream_id(Stream s, std::uint64_t offset = 0) {
  return static_cast<std::uint64_t>(s) + offset;
}

/// Generator for one (seed, stream, index) triple. Paths never share state, so
/// output does not depend on how paths are scheduled across threads.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Fill out[0..n) with independent standard normals.
void fill_normal(std::mt19937_64& eng, double* out, std::size_t n);

}  // namespace volterra
