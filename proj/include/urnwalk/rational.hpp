#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace urnwalk {

// Arbitrary-precision rational, kept canonical at all times: lowest terms,
// denominator > 0. All expectations in this library are carried as Rational;
// decimal strings are a rendering concern only.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& num) : v_(num) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "num", "num/den", optionally signed. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  // Fixed-point decimal with `places` fractional digits, rounded half-even.
  std::string decimal(int places) const;

  double to_double() const { return v_.get_d(); }

  bool is_zero() const { return v_ == 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

 private:
  mpq_class v_;
};

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace urnwalk
