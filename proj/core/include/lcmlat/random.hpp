#pragma once

#include <cstdint>
#include <random>

#include "lcmlat/gcd_set.hpp"

namespace lcmlat {

/// Seeded generator whose draws are identical on every platform (the
/// standard distributions are implementation-defined, so bounded draws are
/// done here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct RandomSetOptions {
  int min_primes = 2;
  int max_primes = 4;
  int max_exponent = 3;
  int max_size = 12;
  /// Largest number of distinct primes in one sampled element; 0 = no limit.
  int max_prime_support = 0;
  /// Sampled generators before closure (upper bound).
  int max_generators = 6;
};

/// Picks primes, samples exponent vectors over them, closes under gcd and
/// keeps the closure within `max_size` elements.
GcdSet random_gcd_set(Rng& rng, const RandomSetOptions& options = {});

/// The first `count` primes.
std::vector<unsigned long> first_primes(int count);

}  // namespace lcmlat
