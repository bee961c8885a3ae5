#ifndef VHETSIM_RNG_HPP
#define VHETSIM_RNG_HPP

#include <cstdint>

namespace vhetsim::rng {

// splitmix64 (Vigna, 2015). Small state, passes BigCrush, and cheap enough to
// construct one generator per (slot, user, base-station) draw site.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  constexpr result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Named sub-streams spawned from one master seed. Each stochastic element of
// a run draws from its own stream, so toggling one (say, mobility) does not
// shift the draws of another (say, shadow fading), and paired runs that share
// a seed see identical link realizations regardless of the policy they pick.
enum class Stream : std::uint64_t {
  user_init = 1,  // initial position, mobility mode, heading
  mobility = 2,   // per-slot heading jitter
  los = 3,        // per-link LoS/NLoS Bernoulli draw
  shadow = 4,     // per-link shadow fading draw
};

constexpr std::uint64_t substream_seed(std::uint64_t master, Stream stream,
                                       std::uint64_t a = 0, std::uint64_t b = 0,
                                       std::uint64_t c = 0) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ static_cast<std::uint64_t>(stream));
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

inline SplitMix64 substream(std::uint64_t master, Stream stream,
                            std::uint64_t a = 0, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
  return SplitMix64(substream_seed(master, stream, a, b, c));
}

}  // namespace vhetsim::rng

#endif  // VHETSIM_RNG_HPP
