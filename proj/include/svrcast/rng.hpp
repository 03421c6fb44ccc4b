#ifndef SVRCAST_RNG_HPP
#define SVRCAST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace svrcast {

// Seedable generator used by every optimizer run. Doubles are produced
// directly from the mt19937_64 stream instead of std::uniform_real_distribution
// so the draw sequence does not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform on [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform on (0, 1), endpoints excluded
  double open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform index in [0, n)
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  // standard normal via Box-Muller; always consumes exactly two draws
  double gauss() {
    const double u1 = open01();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const char* s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (; *s; ++s) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*s));
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Child seed for a named sub-run. Name-based so the derived stream does not
// depend on the position of the algorithm in a comparison list.
inline std::uint64_t child_seed(std::uint64_t master, const char* stream_name) {
  return splitmix64(master ^ fnv1a64(stream_name));
}

}  // namespace svrcast

#endif  // SVRCAST_RNG_HPP
