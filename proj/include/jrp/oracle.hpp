#pragma once

#include <cstdint>
#include <vector>

#include "jrp/model.hpp"

/// Brute-force reference implementations. Nothing here calls into the
/// solver, the reductions or the number-theory helpers; the only shared code
/// is the Nat/Ratio value types and the JrpInstance record.
namespace jrp::oracle {

/// Prime factors of m >= 2 in ascending order, with multiplicity.
std::vector<Nat> trial_division_factor(const Nat& m);

/// Plain double loop over [1,b1] x [1,b2]: smallest cost, then smallest q1,
/// then smallest q2. Throws BudgetExceeded when b1*b2 > cell_budget.
JrpSolution brute_force_jrp(const JrpInstance& inst, const Nat& b1, const Nat& b2,
                            std::uint64_t cell_budget = 10'000'000);

/// Does some d with d | m lie in [l, u]?
bool has_divisor_in_range(const Nat& m, const Nat& l, const Nat& u);

/// Does some subset of `items` sum to `target`? At most 24 items.
bool subset_sum_exists(const std::vector<Nat>& items, const Nat& target);

}  // namespace jrp::oracle
