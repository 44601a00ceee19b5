#include "lcmlat/random.hpp"

#include <algorithm>

#include "lcmlat/errors.hpp"

namespace lcmlat {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<unsigned long> first_primes(int count) {
  std::vector<unsigned long> primes;
  for (unsigned long c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool prime = true;
    for (unsigned long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

GcdSet random_gcd_set(Rng& rng, const RandomSetOptions& options) {
  if (options.min_primes < 1 || options.max_primes < options.min_primes || options.max_size < 1) {
    throw PreconditionError("invalid random set options");
  }
  static const std::vector<unsigned long> pool = first_primes(8);
  std::vector<unsigned long> primes = pool;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    std::swap(primes[i], primes[i + rng.below(primes.size() - i)]);
  }
  primes.resize(static_cast<std::size_t>(rng.uniform(options.min_primes, options.max_primes)));

  auto sample = [&] {
    std::vector<int> support(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) support[i] = static_cast<int>(i);
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
      std::swap(support[i], support[i + rng.below(support.size() - i)]);
    }
    if (options.max_prime_support > 0 &&
        support.size() > static_cast<std::size_t>(options.max_prime_support)) {
      support.resize(options.max_prime_support);
    }
    Integer value = 1;
    for (int idx : support) value *= power(primes[idx], rng.below(options.max_exponent + 1));
    return value;
  };

  std::vector<Integer> generators{sample()};
  GcdSet current = GcdSet::closure(generators);
  const int wanted = static_cast<int>(rng.uniform(2, std::max(2, options.max_generators)));
  for (int attempt = 0; attempt < 4 * wanted && static_cast<int>(generators.size()) < wanted;
       ++attempt) {
    Integer candidate = sample();
    if (current.index_of(candidate)) continue;
    generators.push_back(candidate);
    GcdSet next = GcdSet::closure(generators);
    if (next.size() > options.max_size) {
      generators.pop_back();
      continue;
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace lcmlat
