#include <doctest.h>

#include <cstdlib>

#include "jrp/checks.hpp"
#include "jrp/oracle.hpp"
#include "jrp/reductions.hpp"
#include "jrp/solver.hpp"

using namespace jrp;

namespace {

JrpInstance separable() {
  JrpInstance inst;
  inst.variant = Variant::aperiodic;
  inst.k0 = Nat(0);
  inst.k1 = Nat(4);
  inst.h1 = Nat(1);
  inst.k2 = Nat(9);
  inst.h2 = Nat(1);
  return inst;
}

JrpInstance aperiodic_gadget(unsigned long m) { return build_aperiodic_instance(Nat(m)).instance; }
JrpInstance periodic_gadget(unsigned long m) { return build_periodic_instance(Nat(m)).instance; }

}  // namespace

TEST_CASE("derive_bounds examples") {
  const SearchBounds sep = derive_bounds(separable());
  CHECK(sep.bound1 == Nat(11));
  CHECK(sep.bound2 == Nat(11));

  const SearchBounds l2 = derive_bounds(periodic_gadget(15));
  CHECK(l2.bound2 == Nat(31));
  CHECK(l2.bound2 >= Nat(15));

  JrpInstance heavy = separable();
  heavy.h2 = Nat(1'000'000);
  CHECK(derive_bounds(heavy).bound2 <= Nat(2));
}

TEST_CASE("solve_exact examples") {
  const JrpSolution sep = solve_exact(separable());
  CHECK(sep.q1 == Nat(2));
  CHECK(sep.q2 == Nat(3));
  CHECK(sep.cost == Ratio(10));

  const JrpSolution l2 = solve_exact(periodic_gadget(15));
  CHECK(l2.q1 == Nat(3));
  CHECK(l2.q2 == Nat(15));
  CHECK(l2.cost == Ratio(7208));

  const JrpSolution l1 = solve_exact(aperiodic_gadget(9));
  CHECK(l1.q1 == Nat(3));
  CHECK(l1.q2 == Nat(9));
  CHECK(l1.cost == Ratio(12988));
  CHECK(l1.q1 <= l1.bound1);
  CHECK(l1.q2 <= l1.bound2);
}

TEST_CASE("solve_fixed_q2 examples") {
  const JrpInstance l1 = aperiodic_gadget(9);
  const JrpSolution a = solve_fixed_q2(l1, 9, 18);
  CHECK(a.q1 == Nat(3));
  CHECK(a.cost - eoq_cost(9, l1.k2, l1.h2) == Ratio(28));

  const JrpInstance l2 = periodic_gadget(15);
  const JrpSolution b = solve_fixed_q2(l2, 15, 15);
  CHECK(b.q1 == Nat(3));
  CHECK(b.cost - eoq_cost(15, l2.k2, l2.h2) == Ratio(8));

  // 16 at q1 = 1 beats 17 at q1 = 2
  const JrpSolution c = solve_fixed_q2(l2, 15, 2);
  CHECK(c.q1 == Nat(1));
  CHECK(c.cost == Ratio(7216));
}

TEST_CASE("decide examples") {
  const JrpInstance l2 = periodic_gadget(15);
  CHECK(decide(l2, Ratio(7208)));
  CHECK_FALSE(decide(l2, Ratio(7207)));
  CHECK(decide(l2, periodic_cost(l2, 1, 1)));
  CHECK(decide(l2, Ratio(7208), divisor_oracle()));
  CHECK_FALSE(decide(l2, Ratio::parse("72079/10"), scan_oracle()));
}

TEST_CASE("budget exhaustion is an error naming the box") {
  SolverOptions tight;
  tight.cell_budget = 10;
  try {
    solve_exact(periodic_gadget(105), tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 10);
    CHECK(e.bound2() == derive_bounds(periodic_gadget(105)).bound2.str());
  }
}

TEST_CASE("cell budget can come from the environment") {
  ::setenv(kCellBudgetEnv, "1234", 1);
  CHECK(default_solver_options().cell_budget == 1234);
  ::unsetenv(kCellBudgetEnv);
  CHECK(default_solver_options().cell_budget == SolverOptions{}.cell_budget);
}

TEST_CASE("solve_exact agrees with brute force on random instances") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    SeededRng rng = SeededRng::derive(101, i);
    const Variant v = i % 2 == 0 ? Variant::periodic : Variant::aperiodic;
    const JrpInstance inst = checks::random_instance(rng, v, 1000);
    const SearchBounds box = derive_bounds(inst);
    const JrpSolution fast = solve_exact(inst);
    const JrpSolution slow = oracle::brute_force_jrp(inst, box.bound1, box.bound2);
    CHECK(fast.cost == slow.cost);
    CHECK(fast.q1 == slow.q1);
    CHECK(fast.q2 == slow.q2);
    CHECK(fast.cost == objective(inst, fast.q1, fast.q2));
  }
}

TEST_CASE("doubling the box leaves the answer unchanged") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    SeededRng rng = SeededRng::derive(202, i);
    const Variant v = i % 2 == 0 ? Variant::periodic : Variant::aperiodic;
    const JrpInstance inst = checks::random_instance(rng, v, 1000);
    const SearchBounds box = derive_bounds(inst);
    const JrpSolution a = solve_in_box(inst, box);
    const JrpSolution b = solve_in_box(inst, {box.bound1 * Nat(2), box.bound2 * Nat(2)});
    CHECK(a.q1 == b.q1);
    CHECK(a.q2 == b.q2);
    CHECK(a.cost == b.cost);
  }
}

TEST_CASE("pinning q2 reproduces q1") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    SeededRng rng = SeededRng::derive(303, i);
    const Variant v = i % 2 == 0 ? Variant::periodic : Variant::aperiodic;
    const JrpInstance inst = checks::random_instance(rng, v, 1000);
    const JrpSolution full = solve_exact(inst);
    const JrpSolution pinned = solve_fixed_q2(inst, full.q2, full.bound1);
    CHECK(pinned.q1 == full.q1);
    CHECK(pinned.cost == full.cost);
  }
}

TEST_CASE("divisor solver matches the scan on periodic instances") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    SeededRng rng = SeededRng::derive(404, i);
    const JrpInstance inst = checks::random_instance(rng, Variant::periodic, 1000);
    const JrpSolution a = solve_exact(inst);
    const JrpSolution b = solve_periodic_by_divisors(inst);
    CHECK(a.q1 == b.q1);
    CHECK(a.q2 == b.q2);
    CHECK(a.cost == b.cost);
  }
  for (unsigned long m : {9ul, 15ul, 21ul, 25ul, 105ul, 385ul, 1001ul}) {
    const JrpSolution a = solve_exact(periodic_gadget(m));
    const JrpSolution b = solve_periodic_by_divisors(periodic_gadget(m));
    CHECK(a.q1 == b.q1);
    CHECK(a.q2 == b.q2);
    CHECK(a.cost == b.cost);
  }
  CHECK_THROWS_AS(solve_periodic_by_divisors(separable()), DomainError);
}
