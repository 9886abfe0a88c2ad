#pragma once

#include <cstdint>
#include <random>

namespace bplab {

/* splitmix64 step; used to derive independent stream seeds from one seed. */
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/* Deterministic RNG: mt19937_64 (bit-exact by the standard) with uniform
   doubles built from the top 53 bits, so streams are reproducible across
   platforms and independent of library distribution internals. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /* Independent stream `index` derived from `seed`; used to keep parallel
     reductions byte-deterministic for any thread count. */
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(s);
    return Rng(a ^ (b + index));
  }

  std::uint64_t bits() { return gen_(); }

  /* Uniform in [0,1). */
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bplab
