#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

#include "jrp/number_theory.hpp"
#include "jrp/serialization.hpp"

/// Seeded batch experiments that cross-check the reductions against the
/// brute-force oracles. Each returns a JSON report that depends only on its
/// arguments, so equal seeds give byte-identical dumps.
namespace jrp::checks {

/// Random instance with every coefficient <= max_coeff that satisfies the
/// variant's invariants.
JrpInstance random_instance(SeededRng& rng, Variant variant, std::uint64_t max_coeff);

/// solve_exact vs oracle::brute_force_jrp on `count` random instances,
/// alternating variants. Summary keys: count, agree.
io::Json solver_vs_oracle(std::uint64_t seed, std::size_t count, std::uint64_t max_coeff = 1000);

/// Random valid (M, L, U) with M <= max_m.
RangeDivisorInstance random_range_instance(SeededRng& rng, std::uint64_t max_m);

/// JRP-based RangeDivisor decisions vs oracle::has_divisor_in_range.
/// The first triple is always (385, 2, 6).
io::Json range_divisor(std::uint64_t seed, std::size_t count, std::uint64_t max_m = 2000);

/// pad -> partition_to_rangedivisor -> decide_range_divisor vs
/// oracle::subset_sum_exists on random 4-item instances with items in
/// [2, 15]. Sampling failures are counted separately and never decided.
io::Json partition_pipeline(std::uint64_t seed, std::size_t count,
                            unsigned guard_bits = kDefaultGuardBits);

enum class CurveKind { aperiodic, periodic, rangedivisor };

/// CSV rows q, objective_num, objective_den, convex_baseline_num,
/// convex_baseline_den, gcd for q in [from, to].
///   aperiodic:    M(M-1)(1/q - 1/lcm(q,M)) + 4q  vs (M-1)^2/q + 4q
///   periodic:     M/gcd(q,M) + q                 vs M + q
///   rangedivisor: K0/gcd(q,M) + q                vs K0/q + q
/// Throws DomainError when from > to or from == 0.
void write_curve_csv(std::ostream& out, CurveKind kind, const Nat& m, const Nat& from,
                     const Nat& to, const std::optional<Nat>& k0 = std::nullopt);

}  // namespace jrp::checks
