#pragma once

#include <cstdint>
#include <functional>

#include "jrp/model.hpp"

namespace jrp {

/// Box [1,bound1] x [1,bound2] known to contain every global minimizer.
struct SearchBounds {
  Nat bound1;
  Nat bound2;
};

struct SolverOptions {
  /// Maximum number of evaluation units (cells, row visits, trial divisions)
  /// before BudgetExceeded is thrown.
  std::uint64_t cell_budget = 10'000'000;
};

/// Environment variable consulted by default_solver_options().
inline constexpr const char* kCellBudgetEnv = "JRP_CELL_BUDGET";

/// SolverOptions with cell_budget taken from JRP_CELL_BUDGET when set.
SolverOptions default_solver_options();

/// Exact JRP solver as a value; the reductions are parameterized over it.
using JrpOracle = std::function<JrpSolution(const JrpInstance&)>;

/// bound_i = floor(z / H_i) + 1, z the objective at the pair of
/// independently optimal EOQ periods. Sound because cost >= H1 q1 + H2 q2
/// whenever the instance invariants hold.
SearchBounds derive_bounds(const JrpInstance& inst);

/// Exact argmin over the derived box. Ties go to the smallest q1, then the
/// smallest q2.
JrpSolution solve_exact(const JrpInstance& inst, const SolverOptions& options = {});

/// Exact argmin over an explicit box, same tie-break.
JrpSolution solve_in_box(const JrpInstance& inst, const SearchBounds& box,
                         const SolverOptions& options = {});

/// Argmin over q1 in [1, q1_max] with q2 pinned.
JrpSolution solve_fixed_q2(const JrpInstance& inst, const Nat& q2, const Nat& q1_max,
                           const SolverOptions& options = {});

/// Periodic instances only: exact argmin over the derived box where each
/// row q2 is minimized through the divisors of q2 instead of a q1 scan. The
/// row cost is then independent of how large the q1 range is, at the price
/// of factoring q2 by trial division.
JrpSolution solve_periodic_by_divisors(const JrpInstance& inst,
                                       const SolverOptions& options = {});

JrpOracle scan_oracle(SolverOptions options = {});
JrpOracle divisor_oracle(SolverOptions options = {});

/// Is there a solution of cost at most z?
bool decide(const JrpInstance& inst, const Ratio& z, const SolverOptions& options = {});
bool decide(const JrpInstance& inst, const Ratio& z, const JrpOracle& oracle);

}  // namespace jrp
