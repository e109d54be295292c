#include "wreath/numeric.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace wreath {

Rational frac(const BigInt& num, const BigInt& den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt multinomial(const std::vector<unsigned>& parts) {
  unsigned total = 0;
  BigInt out = 1;
  for (unsigned p : parts) {
    total += p;
    out *= binomial(total, p);
  }
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  BigInt num = pow(BigInt(base.get_num()), exponent);
  BigInt den = pow(BigInt(base.get_den()), exponent);
  out = Rational(num, den);
  out.canonicalize();
  return out;
}

long double log_abs(const BigInt& value) {
  if (value == 0) return -std::numeric_limits<long double>::infinity();
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(std::fabs(static_cast<long double>(mant))) +
         static_cast<long double>(exp2) * std::log(2.0L);
}

long double log_abs(const Rational& value) {
  return log_abs(BigInt(value.get_num())) - log_abs(BigInt(value.get_den()));
}

long double to_long_double(const Rational& value) {
  if (value == 0) return 0.0L;
  long double mag = std::exp(log_abs(value));
  return sgn(value) < 0 ? -mag : mag;
}

long double log_factorial(unsigned m) {
  static const std::array<long double, 1024> table = [] {
    std::array<long double, 1024> t{};
    t[0] = 0.0L;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] + std::log(static_cast<long double>(i));
    return t;
  }();
  if (m < table.size()) return table[m];
  return std::lgamma(static_cast<long double>(m) + 1.0L);
}

long double log_binomial(unsigned n, unsigned k) {
  if (k > n) return -std::numeric_limits<long double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

void LogAccumulator::add_log(long double log_magnitude, int sign) {
  if (sign == 0 || (std::isinf(log_magnitude) && log_magnitude < 0)) return;
  terms_.push_back({log_magnitude, sign > 0 ? 1 : -1});
}

void LogAccumulator::add(long double value) {
  if (value == 0.0L) return;
  add_log(std::log(std::fabs(value)), value > 0 ? 1 : -1);
}

void LogAccumulator::merge(const LogAccumulator& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

long double LogAccumulator::scaled_sum(long double& shift) const {
  if (terms_.empty()) {
    shift = -std::numeric_limits<long double>::infinity();
    return 0.0L;
  }
  shift = terms_.front().log_magnitude;
  for (const auto& t : terms_) shift = std::max(shift, t.log_magnitude);
  std::vector<long double> level;
  level.reserve(terms_.size());
  for (const auto& t : terms_) level.push_back(t.sign * std::exp(t.log_magnitude - shift));
  while (level.size() > 1) {
    std::vector<long double> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level.swap(next);
  }
  return level.front();
}

long double LogAccumulator::log_value() const {
  long double shift = 0;
  long double s = scaled_sum(shift);
  if (s == 0.0L) return -std::numeric_limits<long double>::infinity();
  return shift + std::log(std::fabs(s));
}

int LogAccumulator::sign() const {
  long double shift = 0;
  long double s = scaled_sum(shift);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

long double LogAccumulator::value() const {
  long double shift = 0;
  long double s = scaled_sum(shift);
  if (s == 0.0L) return 0.0L;
  return s * std::exp(shift);
}

}  // namespace wreath
