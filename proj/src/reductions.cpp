#include "jrp/reductions.hpp"

#include <algorithm>

#include "jrp/number_theory.hpp"

namespace jrp {

namespace {

void require_odd_composite(const Nat& m) {
  if (m < Nat(9)) throw InvalidSource("M = " + m.str() + " is below 9");
  if (!m.is_odd()) throw InvalidSource("M = " + m.str() + " is even");
  if (is_prime(m)) throw InvalidSource("M = " + m.str() + " is prime");
}

// Doubling the precision must pin 2^x within this many rounds for any
// irrational 2^x of the sizes used here.
constexpr int kMaxRefinements = 24;

}  // namespace

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::L1:
      return "L1";
    case Lemma::L2:
      return "L2";
    case Lemma::L3:
      return "L3";
  }
  return "L1";
}

Lemma parse_lemma(std::string_view text) {
  if (text == "L1" || text == "1") return Lemma::L1;
  if (text == "L2" || text == "2") return Lemma::L2;
  if (text == "L3" || text == "3") return Lemma::L3;
  throw DomainError("unknown lemma '" + std::string(text) + "'");
}

void RangeDivisorInstance::check() const {
  if (l.is_zero()) throw InvalidSource("RangeDivisor needs L >= 1");
  if (l > u || u > m)
    throw InvalidSource("RangeDivisor needs M >= U >= L (got M=" + m.str() + ", L=" + l.str() +
                        ", U=" + u.str() + ")");
  const Nat s = l + u;
  if (s * s >= Nat(8) * l * u)
    throw InvalidSource("(L+U)^2 < 8LU fails for L=" + l.str() + ", U=" + u.str());
}

Nat PartitionInstance::total() const {
  Nat sum(0);
  for (const Nat& a : items) sum += a;
  return sum;
}

Nat PartitionInstance::half_sum() const { return total() / Nat(2); }

ReductionArtifact build_aperiodic_instance(const Nat& m) {
  require_odd_composite(m);
  const Nat one(1);
  const Nat m2_minus_1 = m * m - one;
  JrpInstance inst;
  inst.variant = Variant::aperiodic;
  inst.k1 = m * (m - one);
  inst.k0 = inst.k1;
  inst.h1 = Nat(4);
  inst.k2 = m * m * m * m2_minus_1;
  inst.h2 = m * m2_minus_1;
  inst.check();
  return {inst, std::nullopt, Lemma::L1, {m, std::nullopt, std::nullopt}};
}

ReductionArtifact build_periodic_instance(const Nat& m) {
  require_odd_composite(m);
  const Nat m_plus_1 = m + Nat(1);
  JrpInstance inst;
  inst.variant = Variant::periodic;
  inst.k0 = m;
  inst.k1 = Nat(0);
  inst.h1 = Nat(1);
  inst.h2 = m * m_plus_1;
  inst.k2 = m * m * m * m_plus_1;
  inst.check();
  return {inst, std::nullopt, Lemma::L2, {m, std::nullopt, std::nullopt}};
}

Nat extract_divisor(const Nat& m, const JrpSolution& sol) {
  if (sol.q2 != m)
    throw ReductionViolated("solver returned q2 = " + sol.q2.str() + ", expected M = " + m.str());
  Nat g = gcd(sol.q1, m);
  if (g == Nat(1) || g == m)
    throw ReductionViolated("gcd(q1, M) = " + g.str() + " is a trivial divisor of " + m.str());
  return g;
}

std::vector<Nat> factor(const Nat& m, Variant variant, const JrpOracle& solver) {
  if (m < Nat(2)) throw DomainError("factor needs M >= 2");
  std::vector<Nat> primes;
  Nat rest = m;
  while (!rest.is_odd()) {
    primes.push_back(Nat(2));
    rest /= Nat(2);
  }
  std::vector<Nat> pending;
  if (rest > Nat(1)) pending.push_back(rest);
  while (!pending.empty()) {
    Nat n = std::move(pending.back());
    pending.pop_back();
    if (is_prime(n)) {
      primes.push_back(std::move(n));
      continue;
    }
    const ReductionArtifact art =
        variant == Variant::aperiodic ? build_aperiodic_instance(n) : build_periodic_instance(n);
    const Nat d = extract_divisor(n, solver(art.instance));
    pending.push_back(n / d);
    pending.push_back(d);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

ReductionArtifact build_rangedivisor_jrp(const RangeDivisorInstance& rd) {
  rd.check();
  const Nat& m = rd.m;
  const Nat lu = rd.l * rd.u;
  JrpInstance inst;
  inst.variant = Variant::periodic;
  inst.k0 = lu;
  inst.k1 = Nat(0);
  inst.h1 = Nat(1);
  // C(M+-1) - C(M) >= H2/(M+1) = (LU+L+U+1) M, far above any q1-side swing.
  inst.h2 = (lu + rd.l + rd.u + Nat(1)) * m * (m + Nat(1));
  inst.k2 = m * m * inst.h2;
  inst.check();
  Ratio threshold = eoq_cost(m, inst.k2, inst.h2) + Ratio(rd.l + rd.u);
  return {inst, threshold, Lemma::L3, {m, rd.l, rd.u}};
}

bool decide_range_divisor(const RangeDivisorInstance& rd, const JrpOracle& solver) {
  const ReductionArtifact art = build_rangedivisor_jrp(rd);
  return decide(art.instance, *art.threshold, solver);
}

PartitionInstance pad_partition(const std::vector<Nat>& items) {
  if (items.size() < 2) throw DomainError("pad_partition needs at least two items");
  std::vector<Nat> base = items;
  Nat sum(0);
  for (const Nat& a : base) {
    if (a.is_zero()) throw DomainError("partition items must be >= 1");
    sum += a;
  }
  if (sum.is_odd())
    for (Nat& a : base) a *= Nat(2);

  const Nat largest = *std::max_element(base.begin(), base.end());
  const unsigned b = static_cast<unsigned>(largest.bit_length());
  unsigned log_n = 0;
  while ((std::size_t{1} << log_n) < base.size()) ++log_n;
  const unsigned width = b + log_n;
  const Nat offset = Nat::pow2(width);

  PartitionInstance out;
  out.bit_width = width;
  out.items.reserve(2 * base.size());
  for (const Nat& a : base) out.items.push_back(offset + a);
  for (std::size_t i = 0; i < base.size(); ++i) out.items.push_back(offset);
  return out;
}

Nat floor_pow2(const Ratio& x, unsigned precision_bits) {
  unsigned bits = std::max(1u, precision_bits);
  for (int round = 0; round < kMaxRefinements; ++round, bits *= 2) {
    const Pow2Bracket br = pow2_bounds(x, bits);
    if (br.lo == br.hi || br.lo.floor() == br.hi.floor()) return Nat(br.lo.floor());
  }
  throw DomainError("could not pin floor(2^" + x.str() + ")");
}

Nat ceil_pow2(const Ratio& x, unsigned precision_bits) {
  unsigned bits = std::max(1u, precision_bits);
  for (int round = 0; round < kMaxRefinements; ++round, bits *= 2) {
    const Pow2Bracket br = pow2_bounds(x, bits);
    if (br.lo == br.hi || br.lo.ceil() == br.hi.ceil()) return Nat(br.hi.ceil());
  }
  throw DomainError("could not pin ceil(2^" + x.str() + ")");
}

PartitionReduction partition_to_rangedivisor(const PartitionInstance& p, std::uint64_t seed,
                                             unsigned guard_bits) {
  const std::size_t n = p.items.size();
  if (n < 2) throw DomainError("partition instance needs at least two items");
  const unsigned width = p.bit_width;
  if (width < 1) throw DomainError("partition bit width must be >= 1");
  const Nat low = Nat::pow2(width);
  const Nat high = Nat::pow2(width + 1);
  for (const Nat& a : p.items)
    if (a < low || a >= high)
      throw DomainError("item " + a.str() + " outside [2^" + std::to_string(width) + ", 2^" +
                        std::to_string(width + 1) + ")");
  const Nat total = p.total();
  if (total.is_odd()) throw DomainError("partition total must be even");

  PartitionReduction out;
  out.lambda = Ratio(mpz_class(3 * width), low.mpz());
  out.half_sum = p.half_sum();
  out.precision_bits = static_cast<unsigned>(6 * width * n + 1) + guard_bits;

  // Half-width of each exponent window: lambda / (2n).
  const Ratio spread = out.lambda / Ratio(2 * n);
  Nat m(1);
  out.primes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Ratio centre = out.lambda * Ratio(p.items[i]);
    // strictly inside the open window
    const Nat lo = floor_pow2(centre - spread, out.precision_bits) + Nat(1);
    const Nat hi_edge = ceil_pow2(centre + spread, out.precision_bits);
    SeededRng rng = SeededRng::derive(seed, i);
    if (hi_edge < Nat(1) + lo)
      throw SamplingFailure(lo.str(), hi_edge.str(), 0, static_cast<long>(i));
    const Nat hi = hi_edge - Nat(1);
    try {
      out.primes.push_back(sample_prime_in_range(lo, hi, rng));
    } catch (const SamplingFailure& e) {
      throw SamplingFailure(e.lo(), e.hi(), e.tries(), static_cast<long>(i));
    }
    m *= out.primes.back();
  }

  const Ratio half(mpz_class(1), mpz_class(2));
  const Ratio a(out.half_sum);
  out.rd.m = m;
  out.rd.l = ceil_pow2(out.lambda * (a - half), out.precision_bits);
  out.rd.u = floor_pow2(out.lambda * (a + half), out.precision_bits);

  const Nat s = out.rd.l + out.rd.u;
  if (s * s >= Nat(8) * out.rd.l * out.rd.u)
    throw PreconditionViolated("(L+U)^2 < 8LU fails: bit width B = " + std::to_string(width) +
                               " is too small for lambda = " + out.lambda.str());
  out.rd.check();
  return out;
}

}  // namespace jrp
