#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jrp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (zero period, variant mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A reduction was asked to start from an integer it does not accept.
class InvalidSource : public Error {
 public:
  using Error::Error;
};

/// A solver answer contradicts what the reduction guarantees.
class ReductionViolated : public Error {
 public:
  using Error::Error;
};

/// The Partition reduction produced bounds that break (L+U)^2 < 8LU.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// The exact solver ran out of its evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string bound1, std::string bound2, std::uint64_t budget)
      : Error("cell budget of " + std::to_string(budget) +
              " exceeded while searching box [1," + bound1 + "]x[1," + bound2 +
              "]"),
        bound1_(std::move(bound1)),
        bound2_(std::move(bound2)),
        budget_(budget) {}

  const std::string& bound1() const noexcept { return bound1_; }
  const std::string& bound2() const noexcept { return bound2_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::string bound1_;
  std::string bound2_;
  std::uint64_t budget_;
};

/// Rejection sampling found no prime in [lo, hi].
class SamplingFailure : public Error {
 public:
  SamplingFailure(std::string lo, std::string hi, std::uint64_t tries,
                  long index = -1)
      : Error(describe(lo, hi, tries, index)),
        lo_(std::move(lo)),
        hi_(std::move(hi)),
        tries_(tries),
        index_(index) {}

  const std::string& lo() const noexcept { return lo_; }
  const std::string& hi() const noexcept { return hi_; }
  std::uint64_t tries() const noexcept { return tries_; }
  /// Item index for which sampling failed, or -1 when not applicable.
  long index() const noexcept { return index_; }

 private:
  static std::string describe(const std::string& lo, const std::string& hi,
                              std::uint64_t tries, long index) {
    std::string msg = "no prime found in [" + lo + "," + hi + "] after " +
                      std::to_string(tries) + " tries";
    if (index >= 0) msg += " (item " + std::to_string(index) + ")";
    return msg;
  }

  std::string lo_;
  std::string hi_;
  std::uint64_t tries_;
  long index_;
};

}  // namespace jrp
