#include "jrp/oracle.hpp"

#include <algorithm>

namespace jrp::oracle {

namespace {

Nat euclid_gcd(Nat a, Nat b) {
  while (!b.is_zero()) {
    Nat r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Ratio frac(const Nat& num, const Nat& den) { return Ratio(num.mpz(), den.mpz()); }

Ratio cost_at(const JrpInstance& inst, const Nat& q1, const Nat& q2) {
  Ratio c = frac(inst.k1, q1) + Ratio(inst.h1 * q1) + frac(inst.k2, q2) + Ratio(inst.h2 * q2);
  const Nat g = euclid_gcd(q1, q2);
  if (inst.variant == Variant::aperiodic) {
    const Nat l = (q1 / g) * q2;
    return c - frac(inst.k0, l);
  }
  return c + frac(inst.k0, g);
}

}  // namespace

std::vector<Nat> trial_division_factor(const Nat& m) {
  if (m < Nat(2)) throw DomainError("trial_division_factor needs m >= 2");
  std::vector<Nat> out;
  Nat rest = m;
  for (Nat d(2); d * d <= rest; ++d) {
    while ((rest % d).is_zero()) {
      out.push_back(d);
      rest /= d;
    }
  }
  if (rest > Nat(1)) out.push_back(rest);
  return out;
}

JrpSolution brute_force_jrp(const JrpInstance& inst, const Nat& b1, const Nat& b2,
                            std::uint64_t cell_budget) {
  if (b1.is_zero() || b2.is_zero()) throw DomainError("box bounds must be >= 1");
  if (b1 * b2 > Nat(cell_budget)) throw BudgetExceeded(b1.str(), b2.str(), cell_budget);
  JrpSolution best{Nat(1), Nat(1), cost_at(inst, Nat(1), Nat(1)), b1, b2};
  for (Nat q1(1); q1 <= b1; ++q1) {
    for (Nat q2(1); q2 <= b2; ++q2) {
      Ratio c = cost_at(inst, q1, q2);
      // q1 ascending outer, q2 ascending inner: strict < keeps the
      // lexicographically first minimizer.
      if (c < best.cost) {
        best.cost = c;
        best.q1 = q1;
        best.q2 = q2;
      }
    }
  }
  return best;
}

bool has_divisor_in_range(const Nat& m, const Nat& l, const Nat& u) {
  if (m.is_zero()) throw DomainError("has_divisor_in_range needs m >= 1");
  const Nat hi = std::min(u, m);
  if (l > hi) return false;
  if (hi - l < Nat(1'000'000)) {
    for (Nat d = l; d <= hi; ++d)
      if (!d.is_zero() && (m % d).is_zero()) return true;
    return false;
  }
  // Wide window: enumerate every divisor from the factorization instead.
  std::vector<Nat> divisors{Nat(1)};
  if (m > Nat(1)) {
    std::vector<Nat> primes = trial_division_factor(m);
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      const std::size_t base = divisors.size();
      Nat power(1);
      for (std::size_t e = i; e < j; ++e) {
        power *= primes[i];
        for (std::size_t k = 0; k < base; ++k) divisors.push_back(divisors[k] * power);
      }
      i = j;
    }
  }
  return std::any_of(divisors.begin(), divisors.end(),
                     [&](const Nat& d) { return l <= d && d <= hi; });
}

bool subset_sum_exists(const std::vector<Nat>& items, const Nat& target) {
  if (items.size() > 24) throw DomainError("subset_sum_exists: more than 24 items");
  const std::uint64_t subsets = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Nat sum(0);
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) sum += items[i];
    if (sum == target) return true;
  }
  return false;
}

}  // namespace jrp::oracle
