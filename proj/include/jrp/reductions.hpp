#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "jrp/model.hpp"
#include "jrp/solver.hpp"

namespace jrp {

enum class Lemma { L1, L2, L3 };

std::string_view to_string(Lemma lemma);
Lemma parse_lemma(std::string_view text);

/// Integers a reduction artifact was built from.
struct ReductionSource {
  Nat m;
  std::optional<Nat> l;
  std::optional<Nat> u;
};

/// A JRP instance produced by one of the reductions. The threshold is set
/// only for the RangeDivisor construction.
struct ReductionArtifact {
  JrpInstance instance;
  std::optional<Ratio> threshold;
  Lemma lemma = Lemma::L1;
  ReductionSource source;
};

/// M >= U >= L >= 1 with (L+U)^2 < 8LU.
struct RangeDivisorInstance {
  Nat m;
  Nat l;
  Nat u;

  /// Throws InvalidSource on violation.
  void check() const;

  friend bool operator==(const RangeDivisorInstance&, const RangeDivisorInstance&) = default;
};

/// Partition instance whose items all lie in [2^bit_width, 2^(bit_width+1))
/// and whose total is even.
struct PartitionInstance {
  std::vector<Nat> items;
  unsigned bit_width = 0;

  Nat total() const;
  /// Half the total.
  Nat half_sum() const;
};

/// Aperiodic factoring instance: K1 = K0 = M(M-1), H1 = 4, K2 = M^3(M^2-1),
/// H2 = M(M^2-1). M must be odd, composite and >= 9.
ReductionArtifact build_aperiodic_instance(const Nat& m);

/// Periodic factoring instance: K0 = M, K1 = 0, H1 = 1, H2 = M(M+1),
/// K2 = M^3(M+1). Same requirements on M.
ReductionArtifact build_periodic_instance(const Nat& m);

/// gcd(sol.q1, M) after checking sol.q2 == M and that the divisor is
/// nontrivial; throws ReductionViolated otherwise.
Nat extract_divisor(const Nat& m, const JrpSolution& sol);

/// Prime factorization of m >= 2 (ascending, with multiplicity) where every
/// odd composite is split by solving a reduction instance with `solver`.
std::vector<Nat> factor(const Nat& m, Variant variant, const JrpOracle& solver);

/// Periodic instance with K0 = LU, K1 = 0, H1 = 1,
/// H2 = (LU + L + U + 1) M (M+1), K2 = M^2 H2 and threshold C(M;K2,H2) + L + U.
/// The optimum is at most the threshold iff M has a divisor in [L, U].
ReductionArtifact build_rangedivisor_jrp(const RangeDivisorInstance& rd);

/// Answers RangeDivisor purely through the JRP decision problem.
bool decide_range_divisor(const RangeDivisorInstance& rd, const JrpOracle& solver);

/// Padding that forces equal-sum splits to use exactly half the items:
/// {2^(B + ceil(log2 n)) + a_i} plus n copies of 2^(B + ceil(log2 n)), B the
/// bit length of the largest item. When the items have an odd total they are
/// doubled first, which preserves the answer and makes the total even.
PartitionInstance pad_partition(const std::vector<Nat>& items);

struct PartitionReduction {
  RangeDivisorInstance rd;
  /// p_i sampled for item i.
  std::vector<Nat> primes;
  /// 3B / 2^B.
  Ratio lambda;
  /// A with 2A = total.
  Nat half_sum;
  /// Precision handed to pow2_bounds for the first attempt.
  unsigned precision_bits = 0;
};

inline constexpr unsigned kDefaultGuardBits = 8;

/// Randomized Partition -> RangeDivisor map. Item i gets a prime strictly
/// inside (2^(lambda a_i - lambda/(2n)), 2^(lambda a_i + lambda/(2n))), drawn
/// with a generator derived from (seed, i). Returns M = prod p_i,
/// L = ceil(2^(lambda(A - 1/2))), U = floor(2^(lambda(A + 1/2))). Throws
/// SamplingFailure (carrying the item index) or PreconditionViolated.
PartitionReduction partition_to_rangedivisor(const PartitionInstance& p, std::uint64_t seed,
                                             unsigned guard_bits = kDefaultGuardBits);

/// floor(2^x) and ceil(2^x), refining the bracket until it pins the integer.
Nat floor_pow2(const Ratio& x, unsigned precision_bits);
Nat ceil_pow2(const Ratio& x, unsigned precision_bits);

}  // namespace jrp
