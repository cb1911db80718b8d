#include "jrp/checks.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "jrp/oracle.hpp"
#include "jrp/reductions.hpp"
#include "jrp/solver.hpp"

namespace jrp::checks {

namespace {

// Holding costs spread over several orders of magnitude so that EOQ periods
// are not all 1.
Nat random_holding(SeededRng& rng, std::uint64_t max_coeff) {
  std::uint64_t cap = 1;
  for (std::uint64_t scale = rng.uniform(0, 3); scale > 0 && cap < max_coeff; --scale) cap *= 10;
  cap = std::min(cap, max_coeff);
  return Nat(rng.uniform(1, cap));
}

io::Json solution_summary(const JrpSolution& sol) {
  io::Json doc;
  doc["q1"] = sol.q1.str();
  doc["q2"] = sol.q2.str();
  doc["cost"] = sol.cost.fraction_str();
  return doc;
}

// Budget for the divisor oracle in the partition pipeline: trial division up
// to the second-largest sampled prime, which stays below 2^27 here.
constexpr std::uint64_t kPipelineBudget = 1'000'000'000;

}  // namespace

JrpInstance random_instance(SeededRng& rng, Variant variant, std::uint64_t max_coeff) {
  JrpInstance inst;
  inst.variant = variant;
  inst.h1 = random_holding(rng, max_coeff);
  inst.h2 = random_holding(rng, max_coeff);
  inst.k1 = Nat(rng.uniform(0, max_coeff));
  inst.k2 = Nat(rng.uniform(0, max_coeff));
  if (variant == Variant::aperiodic) {
    const std::uint64_t cap = std::min(inst.k1, inst.k2).to_u64();
    inst.k0 = Nat(rng.uniform(0, cap));
  } else {
    inst.k0 = Nat(rng.uniform(1, max_coeff));
  }
  inst.check();
  return inst;
}

io::Json solver_vs_oracle(std::uint64_t seed, std::size_t count, std::uint64_t max_coeff) {
  io::Json runs = io::Json::array();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < count; ++i) {
    SeededRng rng = SeededRng::derive(seed, i);
    const Variant variant = i % 2 == 0 ? Variant::periodic : Variant::aperiodic;
    const JrpInstance inst = random_instance(rng, variant, max_coeff);
    const SearchBounds box = derive_bounds(inst);
    const JrpSolution fast = solve_exact(inst);
    const JrpSolution slow = oracle::brute_force_jrp(inst, box.bound1, box.bound2);
    const bool same = fast.cost == slow.cost && fast.q1 == slow.q1 && fast.q2 == slow.q2;
    agree += same ? 1 : 0;

    io::Json run;
    run["instance"] = io::to_json(inst);
    run["bounds"] = {box.bound1.str(), box.bound2.str()};
    run["solver"] = solution_summary(fast);
    run["oracle"] = solution_summary(slow);
    run["agree"] = same;
    runs.push_back(std::move(run));
  }
  io::Json report;
  report["check"] = "solver";
  report["seed"] = std::to_string(seed);
  report["count"] = count;
  report["agree"] = agree;
  report["runs"] = std::move(runs);
  return report;
}

RangeDivisorInstance random_range_instance(SeededRng& rng, std::uint64_t max_m) {
  const std::uint64_t m = rng.uniform(1, max_m);
  const std::uint64_t l = rng.uniform(1, m);
  const std::uint64_t u_cap = std::min(m, 6 * l);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t u = rng.uniform(l, u_cap);
    const std::uint64_t s = l + u;
    if (s * s < 8 * l * u) return {Nat(m), Nat(l), Nat(u)};
  }
  return {Nat(m), Nat(l), Nat(l)};
}

io::Json range_divisor(std::uint64_t seed, std::size_t count, std::uint64_t max_m) {
  io::Json runs = io::Json::array();
  std::size_t agree = 0;
  std::size_t yes = 0;
  const JrpOracle solver = scan_oracle();
  for (std::size_t i = 0; i < count; ++i) {
    SeededRng rng = SeededRng::derive(seed, i);
    const RangeDivisorInstance rd =
        i == 0 ? RangeDivisorInstance{Nat(385), Nat(2), Nat(6)} : random_range_instance(rng, max_m);
    const bool decision = decide_range_divisor(rd, solver);
    const bool truth = oracle::has_divisor_in_range(rd.m, rd.l, rd.u);
    agree += decision == truth ? 1 : 0;
    yes += truth ? 1 : 0;

    io::Json run = io::to_json(rd);
    run["decision"] = decision;
    run["oracle"] = truth;
    runs.push_back(std::move(run));
  }
  io::Json report;
  report["check"] = "range";
  report["seed"] = std::to_string(seed);
  report["count"] = count;
  report["agree"] = agree;
  report["yes_instances"] = yes;
  report["runs"] = std::move(runs);
  return report;
}

io::Json partition_pipeline(std::uint64_t seed, std::size_t count, unsigned guard_bits) {
  io::Json runs = io::Json::array();
  std::size_t agree = 0;
  std::size_t decided = 0;
  std::size_t sampling_failures = 0;
  std::size_t precondition_failures = 0;
  SolverOptions options;
  options.cell_budget = kPipelineBudget;
  const JrpOracle solver = divisor_oracle(options);

  for (std::size_t i = 0; i < count; ++i) {
    SeededRng rng = SeededRng::derive(seed, i);
    std::vector<Nat> items;
    for (int k = 0; k < 4; ++k) items.emplace_back(rng.uniform(2, 15));
    const std::uint64_t run_seed = rng.next();

    io::Json run;
    io::Json item_list = io::Json::array();
    for (const Nat& a : items) item_list.push_back(a.str());
    run["items"] = std::move(item_list);
    run["seed"] = std::to_string(run_seed);

    Nat total(0);
    for (const Nat& a : items) total += a;
    const bool truth = !total.is_odd() && oracle::subset_sum_exists(items, total / Nat(2));
    run["oracle"] = truth;

    const PartitionInstance padded = pad_partition(items);
    try {
      const PartitionReduction red = partition_to_rangedivisor(padded, run_seed, guard_bits);
      const bool decision = decide_range_divisor(red.rd, solver);
      ++decided;
      agree += decision == truth ? 1 : 0;
      run["status"] = "decided";
      run["rangedivisor"] = io::to_json(red.rd);
      run["decision"] = decision;
    } catch (const SamplingFailure& e) {
      ++sampling_failures;
      run["status"] = "sampling_failure";
      run["detail"] = e.what();
    } catch (const PreconditionViolated& e) {
      ++precondition_failures;
      run["status"] = "precondition_violated";
      run["detail"] = e.what();
    }
    runs.push_back(std::move(run));
  }
  io::Json report;
  report["check"] = "partition";
  report["seed"] = std::to_string(seed);
  report["guard_bits"] = guard_bits;
  report["count"] = count;
  report["decided"] = decided;
  report["agree"] = agree;
  report["sampling_failures"] = sampling_failures;
  report["precondition_failures"] = precondition_failures;
  report["runs"] = std::move(runs);
  return report;
}

void write_curve_csv(std::ostream& out, CurveKind kind, const Nat& m, const Nat& from,
                     const Nat& to, const std::optional<Nat>& k0) {
  if (from.is_zero() || from > to)
    throw DomainError("curve needs 1 <= from <= to (got " + from.str() + ".." + to.str() + ")");
  if (m.is_zero()) throw DomainError("curve needs M >= 1");
  if (kind == CurveKind::rangedivisor && !k0)
    throw DomainError("rangedivisor curve needs K0 (or L and U)");

  out << "q,objective_num,objective_den,convex_baseline_num,convex_baseline_den,gcd\n";
  for (Nat q = from; q <= to; ++q) {
    Ratio value;
    Ratio baseline;
    switch (kind) {
      case CurveKind::aperiodic: {
        value = reduced_aperiodic(m, q);
        const Nat m1 = m - Nat(1);
        baseline = Ratio((m1 * m1).mpz(), q.mpz()) + Ratio(Nat(4) * q);
        break;
      }
      case CurveKind::periodic:
        value = reduced_periodic(m, q);
        baseline = Ratio(m + q);
        break;
      case CurveKind::rangedivisor:
        value = Ratio(k0->mpz(), gcd(q, m).mpz()) + Ratio(q);
        baseline = Ratio(k0->mpz(), q.mpz()) + Ratio(q);
        break;
    }
    out << q << ',' << value.num() << ',' << value.den() << ',' << baseline.num() << ','
        << baseline.den() << ',' << gcd(q, m) << '\n';
  }
}

}  // namespace jrp::checks
