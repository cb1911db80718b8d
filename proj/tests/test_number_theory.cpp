#include <doctest.h>

#include <set>
#include <vector>

#include "jrp/number_theory.hpp"

using namespace jrp;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i)
    if (prime[i])
      for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  return prime;
}

// base^k for a rational base, exact.
Ratio power(const Ratio& base, unsigned long k) {
  Ratio r(1);
  for (unsigned long i = 0; i < k; ++i) r *= base;
  return r;
}

// lo <= 2^(p/q) <= hi  <=>  lo^q <= 2^p <= hi^q for q >= 1 (bounds positive).
void check_bracket(const Ratio& x, const Pow2Bracket& b) {
  const unsigned long q = x.den().get_ui();
  const mpz_class p = x.num();
  Ratio two_p = sgn(p) >= 0 ? Ratio(Nat::pow2(p.get_ui()))
                            : Ratio(mpz_class(1), Nat::pow2(mpz_class(-p).get_ui()).mpz());
  CHECK(sgn(b.lo.num()) > 0);
  CHECK(power(b.lo, q) <= two_p);
  CHECK(two_p <= power(b.hi, q));
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(12, 18) == Nat(6));
  CHECK(gcd(3, 15) == Nat(3));
  CHECK(gcd(7, 15) == Nat(1));
  CHECK(gcd(0, 5) == Nat(5));
  CHECK_THROWS_AS(gcd(0, 0), DomainError);
}

TEST_CASE("lcm examples") {
  CHECK(lcm(4, 6) == Nat(12));
  CHECK(lcm(6, 9) == Nat(18));
  CHECK(lcm(5, 315) == Nat(315));
  CHECK_THROWS_AS(lcm(0, 3), DomainError);
}

TEST_CASE("gcd * lcm == a * b") {
  SeededRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Nat a(rng.uniform(1, 1'000'000));
    const Nat b(rng.uniform(1, 1'000'000));
    CHECK(gcd(a, b) * lcm(a, b) == a * b);
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(315));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("is_prime agrees with a sieve below 10^6") {
  const std::size_t n = 1'000'000;
  const std::vector<bool> ref = sieve(n);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i <= n; ++i)
    if (is_prime(Nat(i)) != ref[i]) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("is_prime on large inputs") {
  // 2^89 - 1 and 2^127 - 1 are Mersenne primes; the latter is above the
  // deterministic bound, so it exercises the probabilistic rounds.
  const Nat m89 = Nat::pow2(89) - Nat(1);
  const Nat m127 = Nat::pow2(127) - Nat(1);
  CHECK(m127 > deterministic_primality_bound());
  CHECK(is_prime(m89));
  CHECK(is_prime(m127));
  CHECK_FALSE(is_prime(m89 * m127));
  // strong pseudoprime to bases 2..37 (smallest such), caught by base 41
  CHECK_FALSE(is_prime(Nat::parse("318665857834031151167461")));
  // 3317044064679887385961981 is the first composite that fools {2..41}
  CHECK(Nat::parse("3317044064679887385961981") == deterministic_primality_bound());
  CHECK_FALSE(is_prime(deterministic_primality_bound()));
}

TEST_CASE("sample_prime_in_range examples") {
  const std::set<unsigned long> allowed = {101, 103, 107, 109, 113};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededRng rng(seed);
    const Nat p = sample_prime_in_range(100, 120, rng, 64);
    CHECK(allowed.count(p.to_u64()) == 1);
  }
  SeededRng rng(3);
  CHECK_THROWS_AS(sample_prime_in_range(24, 28, rng, 64), SamplingFailure);
  CHECK(sample_prime_in_range(7, 7, rng, 1) == Nat(7));
  CHECK_THROWS_AS(sample_prime_in_range(9, 8, rng, 5), SamplingFailure);
}

TEST_CASE("sampling failure carries the interval") {
  SeededRng rng(1);
  try {
    sample_prime_in_range(24, 28, rng, 64);
    FAIL("expected SamplingFailure");
  } catch (const SamplingFailure& e) {
    CHECK(e.lo() == "24");
    CHECK(e.hi() == "28");
    CHECK(e.tries() == 64);
  }
}

TEST_CASE("sample_prime_in_range is prime, in range and reproducible") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SeededRng a(seed);
    SeededRng b(seed);
    const Nat lo = Nat::pow2(20 + seed % 40);
    const Nat hi = lo + lo / Nat(16);
    const Nat p = sample_prime_in_range(lo, hi, a);
    CHECK(is_prime(p));
    CHECK(lo <= p);
    CHECK(p <= hi);
    CHECK(sample_prime_in_range(lo, hi, b) == p);
  }
  CHECK(default_sampling_tries(Nat(120)) == 64 * 7);
}

TEST_CASE("isqrt examples") {
  CHECK(isqrt(0) == Nat(0));
  CHECK(isqrt(24) == Nat(4));
  CHECK(isqrt(Nat(54000) / Nat(240)) == Nat(15));
}

TEST_CASE("isqrt brackets n") {
  SeededRng rng(5);
  for (int i = 0; i < 100'000; ++i) {
    const Nat n = rng.uniform(Nat(0), Nat::pow2(1 + i % 120));
    const Nat r = isqrt(n);
    CHECK(r * r <= n);
    CHECK(n < (r + Nat(1)) * (r + Nat(1)));
  }
}

TEST_CASE("pow2_bounds is exact at integers") {
  for (unsigned prec : {1u, 10u, 200u}) {
    const Pow2Bracket b = pow2_bounds(Ratio(1), prec);
    CHECK(b.lo == Ratio(2));
    CHECK(b.hi == Ratio(2));
  }
  const Pow2Bracket neg = pow2_bounds(Ratio(-3), 5);
  CHECK(neg.lo == Ratio::parse("1/8"));
  CHECK(neg.hi == neg.lo);
}

TEST_CASE("pow2_bounds brackets sqrt(8) and sqrt(1/2)") {
  const Ratio three_halves = Ratio::parse("3/2");
  const Pow2Bracket b = pow2_bounds(three_halves, 10);
  check_bracket(three_halves, b);
  // ceil(3/2) = 2: width <= 2^(2 + 1 - 10)
  CHECK(b.hi - b.lo <= Ratio::parse("1/128"));
  CHECK(b.hi - b.lo <= Ratio::parse("1/256") * Ratio(2));
  CHECK(Ratio::parse("282/100") <= b.lo);
  CHECK(b.hi <= Ratio::parse("284/100"));

  const Ratio minus_half = Ratio::parse("-1/2");
  const Pow2Bracket c = pow2_bounds(minus_half, 10);
  check_bracket(minus_half, c);
  CHECK(c.hi - c.lo <= Ratio::parse("1/512"));
  CHECK(Ratio::parse("70/100") <= c.lo);
  CHECK(c.hi <= Ratio::parse("71/100"));
}

TEST_CASE("pow2_bounds: bracket, width, nesting and monotonicity") {
  SeededRng rng(17);
  for (int i = 0; i < 300; ++i) {
    const long num = static_cast<long>(rng.uniform(0, 4000)) - 2000;
    const long den = static_cast<long>(rng.uniform(1, 12));
    const Ratio x{mpz_class(num), mpz_class(den)};
    const unsigned prec = static_cast<unsigned>(rng.uniform(1, 96));
    const Pow2Bracket b = pow2_bounds(x, prec);
    if (x.den() <= 4 && x.num() <= 200 && x.num() >= -200) check_bracket(x, b);
    // hi - lo <= 2^(ceil(x) + 1 - prec)
    const long e = x.ceil().get_si() + 1 - static_cast<long>(prec);
    const Ratio limit = e >= 0 ? Ratio(Nat::pow2(e)) : Ratio(mpz_class(1), Nat::pow2(-e).mpz());
    CHECK(b.hi - b.lo <= limit);
    CHECK(b.lo <= b.hi);

    const Pow2Bracket finer = pow2_bounds(x, 2 * prec);
    CHECK(finer.hi - finer.lo <= b.hi - b.lo);

    const Ratio y = x + Ratio(mpz_class(1), mpz_class(static_cast<long>(rng.uniform(1, 1000))));
    CHECK(b.lo <= pow2_bounds(y, prec).hi);
  }
}

TEST_CASE("SeededRng: derived streams are reproducible and distinct") {
  SeededRng a = SeededRng::derive(7, 0);
  SeededRng b = SeededRng::derive(7, 0);
  SeededRng c = SeededRng::derive(7, 1);
  const std::uint64_t x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  SeededRng r(9);
  for (int i = 0; i < 1000; ++i) {
    const Nat v = r.uniform(Nat(5), Nat(9));
    CHECK(Nat(5) <= v);
    CHECK(v <= Nat(9));
  }
}
