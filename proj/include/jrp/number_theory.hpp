#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "jrp/number.hpp"

namespace jrp {

/// Deterministic random source. Every randomized operation takes one of
/// these explicitly; there is no global generator.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Independent generator for sub-task `index` of a run seeded with `seed`.
  static SeededRng derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi]; lo <= hi required.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform Nat in [lo, hi]; lo <= hi required.
  Nat uniform(const Nat& lo, const Nat& hi);

 private:
  std::mt19937_64 engine_;
};

/// Greatest common divisor. Throws DomainError when both are zero.
Nat gcd(const Nat& a, const Nat& b);
/// Least common multiple. Throws DomainError when either is zero.
Nat lcm(const Nat& a, const Nat& b);
/// floor(sqrt(n)).
Nat isqrt(const Nat& n);

/// Largest n for which the fixed Miller-Rabin witness set {2, ..., 41} is a
/// proof of primality.
const Nat& deterministic_primality_bound();

/// Miller-Rabin primality test.
///
/// Below deterministic_primality_bound() the answer is exact. Above it,
/// `rounds` pseudo-random bases are drawn from a generator seeded by n
/// itself, so the result is reproducible and wrong with probability at most
/// 4^-rounds.
bool is_prime(const Nat& n, unsigned rounds = 40);

/// Default try budget for sample_prime_in_range: 64 * bit_length(hi).
std::uint64_t default_sampling_tries(const Nat& hi);

/// Draws uniform candidates from [lo, hi] until one is prime. Throws
/// SamplingFailure after `max_tries` misses (or immediately if lo > hi).
Nat sample_prime_in_range(const Nat& lo, const Nat& hi, SeededRng& rng,
                          std::optional<std::uint64_t> max_tries = std::nullopt);

/// Certified dyadic bracket around 2^x.
struct Pow2Bracket {
  Ratio lo;
  Ratio hi;
};

/// lo <= 2^x <= hi with hi - lo <= 2^(ceil(x) + 1 - precision_bits).
/// Exact (lo == hi) when x is an integer.
Pow2Bracket pow2_bounds(const Ratio& x, unsigned precision_bits);

}  // namespace jrp
