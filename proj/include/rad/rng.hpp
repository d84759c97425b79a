#ifndef RAD_RNG_HPP
#define RAD_RNG_HPP

#include <cstdint>

namespace rad {

// Counter-based randomness with a documented, bit-exact substream contract.
//
// A run is keyed by a single 64-bit seed. The variate for draw `index` of
// stream `tag` at step `step` is
//
//   z = mix64(mix64(mix64(seed + G1*(step+1)) + G2*(tag+1)) + G3*(index+1))
//   u = (z >> 11) * 2^-53                     (uniform in [0,1))
//
// where mix64 is the splitmix64 finalizer and
//   G1 = 0x9e3779b97f4a7c15   G2 = 0xd1b54a32d192ed03   G3 = 0x8cb92ba72f3d8dd7.
//
// Draws are pure functions of (seed, step, tag, index), so any evaluation
// schedule produces identical results.

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Stream tags used across the project. Fixed; part of the seed contract.
enum class StreamTag : std::uint64_t {
  BatchContext = 0,   // index = prompt group within the step's batch
  BatchAction = 1,    // index = episode within the step's batch
  RefContext = 2,     // index = reference-sample draw (step 0)
  RefAction = 3,      // index = reference-sample draw (step 0)
  MatchupContext = 4, // index = evaluation prompt (step 0)
  MatchupBlue = 5,    // index = evaluation prompt (step 0)
  MatchupRed = 6,     // index = evaluation prompt (step 0)
};

constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t step,
                                  StreamTag tag, std::uint64_t index) {
  std::uint64_t z = seed;
  z = mix64(z + 0x9e3779b97f4a7c15ULL * (step + 1));
  z = mix64(z + 0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(tag) + 1));
  z = mix64(z + 0x8cb92ba72f3d8dd7ULL * (index + 1));
  return z;
}

constexpr double to_unit(std::uint64_t z) {
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// One (seed, step) slice of the contract; hands out uniforms per (tag, index).
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t step = 0;

  double uniform(StreamTag tag, std::uint64_t index) const {
    return to_unit(substream(seed, step, tag, index));
  }
};

}  // namespace rad

#endif
