#include "jrp/solver.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jrp/number_theory.hpp"

namespace jrp {

namespace {

struct Incumbent {
  Ratio cost;
  Nat q1;
  Nat q2;
};

// (cost, q1, q2) lexicographic order; partial minima combine with it too.
bool precedes(const Ratio& cost, const Nat& q1, const Nat& q2, const Incumbent& inc) {
  if (cost != inc.cost) return cost < inc.cost;
  if (q1 != inc.q1) return q1 < inc.q1;
  return q2 < inc.q2;
}

Nat min_nat(const Nat& a, const Nat& b) { return a < b ? a : b; }

// Prime factorization of n >= 1 by trial division, as (prime, exponent).
// Every candidate divisor costs one unit through `charge`.
template <typename Charge>
std::vector<std::pair<Nat, unsigned>> trial_factor(const Nat& n, Charge&& charge) {
  std::vector<std::pair<Nat, unsigned>> out;
  mpz_class rest = n.mpz();
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.emplace_back(Nat(d), e);
  };
  charge();
  strip(2);
  charge();
  strip(3);
  // 6k - 1, 6k + 1
  for (unsigned long d = 5;; d += 6) {
    if (mpz_cmp_ui(rest.get_mpz_t(), d) < 0 || mpz_class(d) * d > rest) break;
    charge();
    strip(d);
    charge();
    strip(d + 2);
  }
  if (rest > 1) out.emplace_back(Nat(rest), 1);
  return out;
}

std::vector<Nat> divisors_from(const std::vector<std::pair<Nat, unsigned>>& factors) {
  std::vector<Nat> divs{Nat(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Nat power(1);
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  return divs;
}

class BoxSearch {
 public:
  BoxSearch(const JrpInstance& inst, SearchBounds box, const SolverOptions& options)
      : inst_(inst), box_(std::move(box)), budget_(options.cell_budget) {
    inst_.check();
    if (box_.bound1.is_zero() || box_.bound2.is_zero())
      throw DomainError("search box bounds must be >= 1");
    aperiodic_ = inst_.variant == Variant::aperiodic;

    // min over q1 in [1, bound1] of C(q1; K1, H1) and of C(q1; K1 - K0, H1)
    min_c1_ = eoq_cost(clamp1(eoq_best_integer(inst_.k1, inst_.h1)), inst_.k1, inst_.h1);
    if (aperiodic_) {
      const Nat reduced_k = inst_.k1 - inst_.k0;
      row_floor_ = eoq_cost(clamp1(eoq_best_integer(reduced_k, inst_.h1)), reduced_k, inst_.h1);
    } else {
      row_floor_ = min_c1_;
    }
  }

  void seed(const Nat& q1, const Nat& q2) {
    if (q1 > box_.bound1 || q2 > box_.bound2) return;
    offer(q1, q2, objective(inst_, q1, q2));
  }

  // Visits rows outward from the EOQ period of item 2. In each direction
  // C(q2; K2, H2) is monotone, so C2 + row_floor_ is a monotone row bound
  // and the walk stops at the first row that exceeds the incumbent.
  template <typename RowVisitor>
  void for_each_row(RowVisitor&& visit) {
    Nat start = isqrt(inst_.k2 / inst_.h2);
    if (start.is_zero()) start = Nat(1);
    start = min_nat(start, box_.bound2);

    for (Nat q2 = start;; q2 -= Nat(1)) {
      if (!visit_row(q2, visit)) break;
      if (q2 == Nat(1)) break;
    }
    for (Nat q2 = start + Nat(1); q2 <= box_.bound2; ++q2)
      if (!visit_row(q2, visit)) break;
  }

  // Linear q1 scan of one row with early exit.
  void scan_row(const Nat& q2, const Nat& q1_max) {
    const Ratio c2 = eoq_cost(q2, inst_.k2, inst_.h2);
    const Ratio joint_floor = aperiodic_ ? -Ratio(inst_.k0.mpz(), q2.mpz())
                                         : Ratio(inst_.k0.mpz(), q2.mpz());
    for (Nat q1(1); q1 <= q1_max; ++q1) {
      charge();
      const Ratio c1 = eoq_cost(q1, inst_.k1, inst_.h1);
      if (best_ && inst_.h1 * q1 * q1 >= inst_.k1) {
        // C1 is increasing from here on, and so is every bound below.
        Ratio bound = c1 + joint_floor;
        if (aperiodic_) {
          Ratio alt = eoq_cost(q1, inst_.k1 - inst_.k0, inst_.h1);
          if (alt > bound) bound = alt;
        }
        if (c2 + bound > best_->cost) break;
      }
      if (!aperiodic_ && q1 > q2) {
        // (q1, q2) costs strictly more than (q1 - q2, q2) once C1 is
        // increasing past q1 - q2: same gcd, smaller C1.
        const Nat back = q1 - q2;
        if (inst_.h1 * back * back >= inst_.k1) break;
      }
      Ratio cost = c1 + c2;
      if (aperiodic_)
        cost -= Ratio(inst_.k0.mpz(), lcm(q1, q2).mpz());
      else
        cost += Ratio(inst_.k0.mpz(), gcd(q1, q2).mpz());
      offer(q1, q2, cost);
    }
  }

  // Periodic only. min over q1 of C1(q1) + K0/gcd(q1,q2) equals
  // min over g | q2 of K0/g + min_k C1(g k), and the smallest row argmin is
  // one of the (at most two) C1-optimal multiples of some divisor g.
  void divisor_row(const Nat& q2) {
    auto factors = trial_factor(q2, [this] { charge(); });
    for (const Nat& g : divisors_from(factors)) {
      const Nat k_max = box_.bound1 / g;
      if (k_max.is_zero()) continue;
      Nat k_lo = isqrt(inst_.k1 / (inst_.h1 * g * g));
      if (k_lo.is_zero()) k_lo = Nat(1);
      k_lo = min_nat(k_lo, k_max);
      const Nat k_hi = min_nat(k_lo + Nat(1), k_max);
      for (const Nat& k : {k_lo, k_hi}) {
        charge();
        const Nat q1 = g * k;
        offer(q1, q2, periodic_cost(inst_, q1, q2));
      }
    }
  }

  JrpSolution result() const {
    if (!best_) throw DomainError("empty search box");
    return {best_->q1, best_->q2, best_->cost, box_.bound1, box_.bound2};
  }

  const SearchBounds& box() const { return box_; }

 private:
  Nat clamp1(const Nat& q) const { return min_nat(q, box_.bound1); }

  template <typename RowVisitor>
  bool visit_row(const Nat& q2, RowVisitor& visit) {
    charge();
    const Ratio c2 = eoq_cost(q2, inst_.k2, inst_.h2);
    if (best_ && c2 + row_floor_ > best_->cost) return false;
    if (best_) {
      // Row-local bound using K0/lcm <= K0/q2 resp. K0/gcd >= K0/q2.
      const Ratio joint = Ratio(inst_.k0.mpz(), q2.mpz());
      const Ratio local = aperiodic_ ? c2 + min_c1_ - joint : c2 + min_c1_ + joint;
      if (local > best_->cost) return true;
    }
    visit(q2);
    return true;
  }

  void charge() {
    if (++used_ > budget_) throw BudgetExceeded(box_.bound1.str(), box_.bound2.str(), budget_);
  }

  void offer(const Nat& q1, const Nat& q2, const Ratio& cost) {
    if (!best_ || precedes(cost, q1, q2, *best_)) best_ = Incumbent{cost, q1, q2};
  }

  const JrpInstance& inst_;
  SearchBounds box_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  bool aperiodic_ = false;
  Ratio min_c1_;
  Ratio row_floor_;
  std::optional<Incumbent> best_;
};

}  // namespace

SolverOptions default_solver_options() {
  SolverOptions options;
  if (const char* env = std::getenv(kCellBudgetEnv); env != nullptr && *env != '\0')
    options.cell_budget = Nat::parse(env).to_u64();
  return options;
}

SearchBounds derive_bounds(const JrpInstance& inst) {
  inst.check();
  const Nat q1 = eoq_best_integer(inst.k1, inst.h1);
  const Nat q2 = eoq_best_integer(inst.k2, inst.h2);
  const Ratio z = objective(inst, q1, q2);
  // z > 0 for valid instances, so floor(z / H) is a Nat.
  return {Nat((z / Ratio(inst.h1)).floor()) + Nat(1),
          Nat((z / Ratio(inst.h2)).floor()) + Nat(1)};
}

JrpSolution solve_in_box(const JrpInstance& inst, const SearchBounds& box,
                         const SolverOptions& options) {
  BoxSearch search(inst, box, options);
  search.seed(eoq_best_integer(inst.k1, inst.h1), eoq_best_integer(inst.k2, inst.h2));
  search.for_each_row([&](const Nat& q2) { search.scan_row(q2, box.bound1); });
  return search.result();
}

JrpSolution solve_exact(const JrpInstance& inst, const SolverOptions& options) {
  return solve_in_box(inst, derive_bounds(inst), options);
}

JrpSolution solve_fixed_q2(const JrpInstance& inst, const Nat& q2, const Nat& q1_max,
                           const SolverOptions& options) {
  BoxSearch search(inst, {q1_max, q2}, options);
  search.scan_row(q2, q1_max);
  return search.result();
}

JrpSolution solve_periodic_by_divisors(const JrpInstance& inst, const SolverOptions& options) {
  if (inst.variant != Variant::periodic)
    throw DomainError("divisor solver handles periodic instances only");
  BoxSearch search(inst, derive_bounds(inst), options);
  search.seed(eoq_best_integer(inst.k1, inst.h1), eoq_best_integer(inst.k2, inst.h2));
  search.for_each_row([&](const Nat& q2) { search.divisor_row(q2); });
  return search.result();
}

JrpOracle scan_oracle(SolverOptions options) {
  return [options](const JrpInstance& inst) { return solve_exact(inst, options); };
}

JrpOracle divisor_oracle(SolverOptions options) {
  return [options](const JrpInstance& inst) {
    return solve_periodic_by_divisors(inst, options);
  };
}

bool decide(const JrpInstance& inst, const Ratio& z, const SolverOptions& options) {
  return solve_exact(inst, options).cost <= z;
}

bool decide(const JrpInstance& inst, const Ratio& z, const JrpOracle& oracle) {
  return oracle(inst).cost <= z;
}

}  // namespace jrp
