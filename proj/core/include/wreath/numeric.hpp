#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wreath {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a configurable size cap (table order, label count, ...) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input (group spec, group file, character table) fails validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in canonical form.
Rational frac(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt multinomial(const std::vector<unsigned>& parts);
BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// Natural log of a positive big integer, accurate to long double precision.
long double log_abs(const BigInt& value);
long double log_abs(const Rational& value);
long double to_long_double(const Rational& value);

/// ln(m!) via lgamma, cached for small m.
long double log_factorial(unsigned m);
long double log_binomial(unsigned n, unsigned k);

std::string to_string(const BigInt& value);
/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Sums signed terms given as (log|term|, sign) without overflow.
///
/// Terms are kept and reduced pairwise after shifting by the largest
/// magnitude, so the result does not depend on insertion order beyond
/// the fixed tree shape.
class LogAccumulator {
 public:
  void add_log(long double log_magnitude, int sign = 1);
  void add(long double value);
  void merge(const LogAccumulator& other);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Signed sum scaled by exp(-shift); shift is the largest log magnitude.
  long double scaled_sum(long double& shift) const;
  /// ln of the absolute value of the sum; -inf for zero.
  long double log_value() const;
  int sign() const;
  long double value() const;

 private:
  struct Term {
    long double log_magnitude;
    int sign;
  };
  std::vector<Term> terms_;
};

}  // namespace wreath
