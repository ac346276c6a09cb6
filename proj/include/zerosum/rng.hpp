#ifndef ZEROSUM_RNG_HPP
#define ZEROSUM_RNG_HPP

#include <cstdint>

namespace zerosum {

/// SplitMix64 (Steele, Lea, Flood). Every seeded choice in the library draws
/// from this generator so certificates reproduce bit-for-bit from their seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound) via the high half of a 64x64 product.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Stream for trial `index` of a budgeted search seeded with `seed`.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(seed ^ index);
}

}  // namespace zerosum

#endif
