#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "jrp/errors.hpp"

namespace jrp {

/// Arbitrary-precision nonnegative integer.
///
/// Subtraction that would go negative and division by zero throw
/// DomainError, so every live Nat is a valid natural number.
class Nat {
 public:
  Nat() = default;

  template <std::unsigned_integral T>
  Nat(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  template <std::signed_integral T>
  Nat(T v) : v_(static_cast<long>(v)) {  // NOLINT(implicit)
    if (v < 0) throw DomainError("Nat cannot hold a negative value");
  }

  explicit Nat(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw DomainError("Nat cannot hold a negative value");
  }

  /// Parses a nonempty string of decimal digits.
  static Nat parse(std::string_view text);

  /// 2^exponent.
  static Nat pow2(unsigned long exponent);

  const mpz_class& mpz() const noexcept { return v_; }
  std::string str() const { return v_.get_str(10); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  /// Number of bits in the binary representation; 0 for zero.
  std::size_t bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }
  bool fits_u64() const noexcept { return mpz_fits_ulong_p(v_.get_mpz_t()); }
  /// Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;

  Nat& operator+=(const Nat& o) {
    v_ += o.v_;
    return *this;
  }
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o) {
    v_ *= o.v_;
    return *this;
  }
  /// Floor division.
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }

  Nat& operator++() {
    ++v_;
    return *this;
  }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.str();
  }

 private:
  mpz_class v_;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() = default;
  Ratio(const Nat& n) : v_(n.mpz()) {}  // NOLINT(implicit)

  template <std::signed_integral T>
  Ratio(T v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  template <std::unsigned_integral T>
  Ratio(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  explicit Ratio(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  /// num/den; throws DomainError when den is zero.
  Ratio(const mpz_class& num, const mpz_class& den);

  /// Accepts "n", "-n" or "n/d" with decimal digits.
  static Ratio parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  /// Largest integer not above the value.
  mpz_class floor() const;
  /// Smallest integer not below the value.
  mpz_class ceil() const;

  /// Always "num/den", e.g. "7208/1". Used on the wire.
  std::string fraction_str() const;
  /// "7208" for integers, "37/5" otherwise.
  std::string str() const { return v_.get_str(10); }

  Ratio& operator+=(const Ratio& o) {
    v_ += o.v_;
    return *this;
  }
  Ratio& operator-=(const Ratio& o) {
    v_ -= o.v_;
    return *this;
  }
  Ratio& operator*=(const Ratio& o) {
    v_ *= o.v_;
    return *this;
  }
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(Ratio a) {
    a.v_ = -a.v_;
    return a;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

}  // namespace jrp
