#include "jrp/number.hpp"

#include <cctype>

namespace jrp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Nat Nat::parse(std::string_view text) {
  if (!all_digits(text))
    throw DomainError("not a nonnegative decimal integer: '" + std::string(text) + "'");
  return Nat(mpz_class(std::string(text), 10));
}

Nat Nat::pow2(unsigned long exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return Nat(std::move(v));
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw DomainError("value " + str() + " does not fit in 64 bits");
  return mpz_get_ui(v_.get_mpz_t());
}

Nat& Nat::operator-=(const Nat& o) {
  if (cmp(v_, o.v_) < 0)
    throw DomainError("Nat subtraction underflow: " + str() + " - " + o.str());
  v_ -= o.v_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Ratio::Ratio(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Ratio Ratio::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("not a rational of the form <num>/<den>: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  return Ratio(n, mpz_class(std::string(den), 10));
}

mpz_class Ratio::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Ratio::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Ratio::fraction_str() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (sgn(o.v_) == 0) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace jrp
