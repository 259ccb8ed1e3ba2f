#pragma once

// Exact integer and rational scalars. Both wrap GMP; the wrappers pin the
// conventions the rest of the engine relies on (canonical rationals with a
// positive denominator, least-nonnegative remainders, strict exact division).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace schemekit {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string; throws Error on bad input.
  static BigInt parse(std::string_view text);

  [[nodiscard]] std::string to_string() const { return v_.get_str(); }

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] bool fits_long() const { return v_.fits_slong_p(); }
  [[nodiscard]] long to_long() const;
  [[nodiscard]] std::size_t bit_size() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }
  [[nodiscard]] BigInt abs() const;

  [[nodiscard]] const mpz_class& raw() const { return v_; }
  [[nodiscard]] mpz_class& raw() { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a);

 private:
  mpz_class v_;
};

/// Exact quotient a / b. Throws DivisionByZero for b = 0 and Error when b does not divide a.
BigInt divexact(const BigInt& a, const BigInt& b);
/// Least nonnegative remainder: 0 <= mod(a, b) < |b|.
BigInt mod(const BigInt& a, const BigInt& b);
/// Floor-style quotient paired with mod(): a = floor_div(a, b) * b + mod(a, b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

struct ExtendedGcd {
  BigInt g;
  BigInt u;
  BigInt v;
};

/// g = gcd(a, b) > 0 with u*a + v*b = g. Throws Error when both inputs are zero.
ExtendedGcd ext_gcd(const BigInt& a, const BigInt& b);

/// Canonical rational: gcd(num, den) = 1 and den > 0 at all times.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional sign.
  static BigRational parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
  [[nodiscard]] BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

  [[nodiscard]] const mpq_class& raw() const { return v_; }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ + b.v_)); }
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ - b.v_)); }
  friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.v_ * b.v_)); }
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& a);

 private:
  mpq_class v_;
};

}  // namespace schemekit
