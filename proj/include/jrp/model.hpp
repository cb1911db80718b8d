#pragma once

#include <string>
#include <string_view>

#include "jrp/number.hpp"

namespace jrp {

enum class Variant { aperiodic, periodic };

std::string_view to_string(Variant v);
/// "aperiodic" or "periodic"; anything else is a DomainError.
Variant parse_variant(std::string_view text);

/// Two-item joint replenishment instance with integer coefficients.
///
/// Aperiodic: C(q1;K1,H1) + C(q2;K2,H2) - K0/lcm(q1,q2), with K0 <= K1, K2.
/// Periodic:  C(q1;K1,H1) + C(q2;K2,H2) + K0/gcd(q1,q2), with K0 >= 1.
struct JrpInstance {
  Variant variant = Variant::periodic;
  Nat k0;
  Nat k1;
  Nat k2;
  Nat h1{1};
  Nat h2{1};

  /// Throws DomainError describing the first violated invariant.
  void check() const;

  friend bool operator==(const JrpInstance&, const JrpInstance&) = default;
};

struct JrpSolution {
  Nat q1;
  Nat q2;
  Ratio cost;
  Nat bound1;
  Nat bound2;
};

/// K/q + H*q.
Ratio eoq_cost(const Nat& q, const Nat& k, const Nat& h);

/// Integer q >= 1 minimizing eoq_cost(q, k, h); the smaller q on ties.
Nat eoq_best_integer(const Nat& k, const Nat& h);

Ratio aperiodic_cost(const JrpInstance& inst, const Nat& q1, const Nat& q2);
Ratio periodic_cost(const JrpInstance& inst, const Nat& q1, const Nat& q2);
/// Dispatches on inst.variant.
Ratio objective(const JrpInstance& inst, const Nat& q1, const Nat& q2);

/// M(M-1)(1/q1 - 1/lcm(q1,M)) + 4 q1: the aperiodic reduction with q2 = M.
Ratio reduced_aperiodic(const Nat& m, const Nat& q1);
/// M/gcd(q1,M) + q1: the periodic reduction with q2 = M.
Ratio reduced_periodic(const Nat& m, const Nat& q1);

}  // namespace jrp
