#pragma once

// Seeded generator for every fuzz stream: std::mt19937_64 (fully specified by
// the standard) with bounded draws by rejection, so streams are identical
// across standard libraries. Instance i of a run uses splitmix64(seed + i).

#include "jkv/rational.hpp"

#include <cstdint>
#include <random>

namespace jkv::oracle {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed + index); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) throw Error("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  long nonzero(long bound) {
    long v;
    do v = uniform(-bound, bound);
    while (v == 0);
    return v;
  }

  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with p in [-bound, bound], q in [1, bound].
  Rational rational(long bound) { return make_rational(uniform(-bound, bound), uniform(1, bound)); }

  Rational nonzero_rational(long bound) { return make_rational(nonzero(bound), uniform(1, bound)); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jkv::oracle
