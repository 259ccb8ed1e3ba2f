#include "schemekit/exactnum.hpp"

#include <cctype>
#include <ostream>

#include "schemekit/error.hpp"

namespace schemekit {

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt BigInt::parse(std::string_view text) {
  if (!is_decimal(text)) throw Error("not a decimal integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(mpz_class(std::string(text), 10));
}

long BigInt::to_long() const {
  if (!fits_long()) throw Error("integer does not fit a machine word: " + to_string());
  return v_.get_si();
}

BigInt BigInt::abs() const {
  mpz_class r;
  mpz_abs(r.get_mpz_t(), v_.get_mpz_t());
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_.get_str(); }

BigInt divexact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t())) {
    throw Error(b.to_string() + " does not divide " + a.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt mod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(l));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

ExtendedGcd ext_gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero() && b.is_zero()) throw Error("ext_gcd of (0, 0) is undefined");
  mpz_class g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return {BigInt(std::move(g)), BigInt(std::move(u)), BigInt(std::move(v))};
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInt::parse(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error("malformed rational: '" + std::string(text) + "'");
  }
  return BigRational(BigInt::parse(text.substr(0, slash)), BigInt::parse(den_text));
}

std::string BigRational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw DivisionByZero();
  return BigRational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const BigRational& a) { return os << a.to_string(); }

}  // namespace schemekit
