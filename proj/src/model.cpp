#include "jrp/model.hpp"

#include "jrp/number_theory.hpp"

namespace jrp {

namespace {

void require_positive_period(const Nat& q, const char* what) {
  if (q.is_zero()) throw DomainError(std::string(what) + " must be >= 1");
}

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::aperiodic ? "aperiodic" : "periodic";
}

Variant parse_variant(std::string_view text) {
  if (text == "aperiodic") return Variant::aperiodic;
  if (text == "periodic") return Variant::periodic;
  throw DomainError("unknown variant '" + std::string(text) + "'");
}

void JrpInstance::check() const {
  if (h1.is_zero() || h2.is_zero()) throw DomainError("holding costs H1, H2 must be >= 1");
  if (variant == Variant::aperiodic) {
    if (k0 > k1 || k0 > k2)
      throw DomainError("aperiodic instance needs K0 <= K1 and K0 <= K2");
  } else if (k0.is_zero()) {
    throw DomainError("periodic instance needs K0 >= 1");
  }
}

Ratio eoq_cost(const Nat& q, const Nat& k, const Nat& h) {
  require_positive_period(q, "period q");
  return Ratio(k.mpz(), q.mpz()) + Ratio(h * q);
}

Nat eoq_best_integer(const Nat& k, const Nat& h) {
  if (h.is_zero()) throw DomainError("eoq_best_integer: H must be >= 1");
  if (k.is_zero()) return Nat(1);
  Nat lo = isqrt(k / h);
  if (lo.is_zero()) lo = Nat(1);
  Nat hi = lo + Nat(1);
  return eoq_cost(lo, k, h) <= eoq_cost(hi, k, h) ? lo : hi;
}

Ratio aperiodic_cost(const JrpInstance& inst, const Nat& q1, const Nat& q2) {
  if (inst.variant != Variant::aperiodic)
    throw DomainError("aperiodic_cost called on a periodic instance");
  require_positive_period(q1, "q1");
  require_positive_period(q2, "q2");
  return eoq_cost(q1, inst.k1, inst.h1) + eoq_cost(q2, inst.k2, inst.h2) -
         Ratio(inst.k0.mpz(), lcm(q1, q2).mpz());
}

Ratio periodic_cost(const JrpInstance& inst, const Nat& q1, const Nat& q2) {
  if (inst.variant != Variant::periodic)
    throw DomainError("periodic_cost called on an aperiodic instance");
  require_positive_period(q1, "q1");
  require_positive_period(q2, "q2");
  return eoq_cost(q1, inst.k1, inst.h1) + eoq_cost(q2, inst.k2, inst.h2) +
         Ratio(inst.k0.mpz(), gcd(q1, q2).mpz());
}

Ratio objective(const JrpInstance& inst, const Nat& q1, const Nat& q2) {
  return inst.variant == Variant::aperiodic ? aperiodic_cost(inst, q1, q2)
                                            : periodic_cost(inst, q1, q2);
}

Ratio reduced_aperiodic(const Nat& m, const Nat& q1) {
  require_positive_period(q1, "q1");
  require_positive_period(m, "M");
  const Ratio weight(m * (m - Nat(1)));
  const Ratio discount_gap = Ratio(mpz_class(1), q1.mpz()) - Ratio(mpz_class(1), lcm(q1, m).mpz());
  return weight * discount_gap + Ratio(Nat(4) * q1);
}

Ratio reduced_periodic(const Nat& m, const Nat& q1) {
  require_positive_period(q1, "q1");
  require_positive_period(m, "M");
  return Ratio(m.mpz(), gcd(q1, m).mpz()) + Ratio(q1);
}

}  // namespace jrp
