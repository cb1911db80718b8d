#include "jrp/number_theory.hpp"

#include <array>
#include <vector>

namespace jrp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::array<unsigned long, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};

// One strong-probable-prime round for odd n > 2 with n - 1 = d * 2^s.
bool strong_probable_prime(const mpz_class& n, const mpz_class& d, unsigned long s,
                           const mpz_class& base) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Roots 2^(2^-j), j = 1..count, as fixed-point integers with `bits` fraction
// bits, rounded toward -inf (lower) or +inf (upper).
struct RootTable {
  std::vector<mpz_class> lower;
  std::vector<mpz_class> upper;
};

mpz_class ceil_sqrt(const mpz_class& v) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) ++r;
  return r;
}

RootTable dyadic_roots(unsigned long count, unsigned long bits) {
  RootTable t;
  t.lower.reserve(count);
  t.upper.reserve(count);
  mpz_class lo = mpz_class(2) << bits;
  mpz_class hi = lo;
  for (unsigned long j = 1; j <= count; ++j) {
    mpz_class shifted_lo = lo << bits;
    mpz_sqrt(lo.get_mpz_t(), shifted_lo.get_mpz_t());
    hi = ceil_sqrt(hi << bits);
    t.lower.push_back(lo);
    t.upper.push_back(hi);
  }
  return t;
}

// 2^(k / 2^count) in fixed point, k in [0, 2^count], rounded in one direction.
mpz_class fixed_pow2_fraction(const mpz_class& k, unsigned long count, unsigned long bits,
                              const std::vector<mpz_class>& roots, bool round_up) {
  mpz_class one = mpz_class(1) << bits;
  if (k == (mpz_class(1) << count)) return one << 1;
  mpz_class acc = one;
  for (unsigned long j = 1; j <= count; ++j) {
    // bit of weight 2^-j
    if (mpz_tstbit(k.get_mpz_t(), count - j) == 0) continue;
    mpz_class prod = acc * roots[j - 1];
    if (round_up)
      mpz_cdiv_q_2exp(acc.get_mpz_t(), prod.get_mpz_t(), bits);
    else
      mpz_fdiv_q_2exp(acc.get_mpz_t(), prod.get_mpz_t(), bits);
  }
  return acc;
}

// v * 2^e as an exact rational, e possibly negative.
Ratio scale_pow2(const mpz_class& v, const mpz_class& e) {
  if (sgn(e) >= 0) return Ratio(mpq_class(v << static_cast<mp_bitcnt_t>(e.get_ui())));
  mpz_class den = mpz_class(1) << static_cast<mp_bitcnt_t>(mpz_class(-e).get_ui());
  return Ratio(v, den);
}

}  // namespace

SeededRng SeededRng::derive(std::uint64_t seed, std::uint64_t index) {
  return SeededRng(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw DomainError("uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return lo + x % range;
  }
}

Nat SeededRng::uniform(const Nat& lo, const Nat& hi) {
  if (lo > hi) throw DomainError("uniform: empty range");
  const mpz_class range = hi.mpz() - lo.mpz() + 1;
  const std::size_t bits = mpz_sizeinbase(range.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      std::uint64_t r = next();
      x += mpz_class(static_cast<unsigned long>(r));
    }
    // keep exactly `bits` low bits
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x < range) return Nat(lo.mpz() + x);
  }
}

Nat gcd(const Nat& a, const Nat& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(g));
}

Nat lcm(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("lcm requires positive arguments");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Nat(std::move(l));
}

Nat isqrt(const Nat& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.mpz().get_mpz_t());
  return Nat(std::move(r));
}

const Nat& deterministic_primality_bound() {
  static const Nat bound = Nat::parse("3317044064679887385961981");
  return bound;
}

bool is_prime(const Nat& n, unsigned rounds) {
  const mpz_class& v = n.mpz();
  if (v < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (v == p) return true;
    if (mpz_divisible_ui_p(v.get_mpz_t(), p)) return false;
  }
  mpz_class d = v - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (n < deterministic_primality_bound()) {
    for (unsigned long p : kWitnesses)
      if (!strong_probable_prime(v, d, s, mpz_class(p))) return false;
    return true;
  }

  SeededRng rng(splitmix64(mpz_get_ui(v.get_mpz_t()) ^ n.bit_length()));
  const Nat lo(2);
  const Nat hi(v - 2);
  for (unsigned r = 0; r < rounds; ++r)
    if (!strong_probable_prime(v, d, s, rng.uniform(lo, hi).mpz())) return false;
  return true;
}

std::uint64_t default_sampling_tries(const Nat& hi) {
  return 64 * std::max<std::uint64_t>(1, hi.bit_length());
}

Nat sample_prime_in_range(const Nat& lo, const Nat& hi, SeededRng& rng,
                          std::optional<std::uint64_t> max_tries) {
  const std::uint64_t budget = max_tries.value_or(default_sampling_tries(hi));
  if (lo > hi) throw SamplingFailure(lo.str(), hi.str(), 0);
  for (std::uint64_t t = 0; t < budget; ++t) {
    Nat candidate = rng.uniform(lo, hi);
    if (is_prime(candidate)) return candidate;
  }
  throw SamplingFailure(lo.str(), hi.str(), budget);
}

Pow2Bracket pow2_bounds(const Ratio& x, unsigned precision_bits) {
  if (precision_bits < 1) throw DomainError("pow2_bounds: precision_bits must be >= 1");
  const mpz_class whole = x.floor();
  const mpq_class frac = x.mpq() - whole;
  if (sgn(frac) == 0) {
    Ratio exact = scale_pow2(mpz_class(1), whole);
    return {exact, exact};
  }

  // Fraction-only width target: 2^(2 - precision_bits), since ceil(x) = floor(x) + 1.
  unsigned long bits = precision_bits + 16;
  for (unsigned long b = precision_bits; b > 0; b >>= 1) ++bits;
  for (;;) {
    const unsigned long count = bits;
    mpz_class scaled_num = frac.get_num() << count;
    mpz_class k_lo;
    mpz_fdiv_q(k_lo.get_mpz_t(), scaled_num.get_mpz_t(), frac.get_den_mpz_t());
    const bool exact = mpz_divisible_p(scaled_num.get_mpz_t(), frac.get_den_mpz_t()) != 0;
    const mpz_class k_hi = exact ? k_lo : k_lo + 1;

    RootTable roots = dyadic_roots(count, bits);
    mpz_class lo = fixed_pow2_fraction(k_lo, count, bits, roots.lower, false);
    mpz_class hi = fixed_pow2_fraction(k_hi, count, bits, roots.upper, true);

    // hi - lo <= 2^(bits + 2 - precision_bits), in fixed-point units
    mpz_class width = hi - lo;
    const long slack_exp = static_cast<long>(bits) + 2 - static_cast<long>(precision_bits);
    if (slack_exp >= 0 && width <= (mpz_class(1) << slack_exp)) {
      mpz_class shift = whole - static_cast<long>(bits);
      return {scale_pow2(lo, shift), scale_pow2(hi, shift)};
    }
    bits += 32;
  }
}

}  // namespace jrp
