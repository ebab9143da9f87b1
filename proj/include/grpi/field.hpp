#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "grpi/error.hpp"

namespace grpi {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n" or "n/d" (optional leading sign) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto ok = !s.empty();
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
  }
  if (!ok) throw InputError("not a rational number: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("not a rational number: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Field of rational numbers (characteristic 0).
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_rational(const Rational& q) const { return q; }
  value_type parse(std::string_view s) const { return parse_rational(s); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  std::string format(const value_type& v) const { return v.get_str(); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "rational"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Element of Z/pZ. The modulus travels with the value so mixed-field
/// arithmetic is caught.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Zp operator+(Zp a, Zp b) {
    check(a, b);
    auto s = a.v_ + b.v_;
    return {s >= a.p_ ? s - a.p_ : s, a.p_};
  }
  friend Zp operator-(Zp a, Zp b) {
    check(a, b);
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_};
  }
  friend Zp operator-(Zp a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend Zp operator*(Zp a, Zp b) {
    check(a, b);
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_};
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Zp pow(std::uint64_t e) const {
    Zp result(1, p_), base = *this;
    for (; e; e >>= 1, base *= base)
      if (e & 1) result *= base;
    return result;
  }
  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Z/" + std::to_string(p_));
    return pow(p_ - 2);
  }

 private:
  static void check(const Zp& a, const Zp& b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed moduli in Z/p arithmetic");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

/// Prime field F_p, p < 2^32 (checked prime by trial division).
class PrimeField {
 public:
  using value_type = Zp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw InputError("prime modulus out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
  }

  value_type zero() const { return {0, p_}; }
  value_type one() const { return {1, p_}; }
  value_type from_int(long v) const {
    auto m = static_cast<long long>(p_);
    return {static_cast<std::uint64_t>(((v % m) + m) % m), p_};
  }
  value_type from_rational(const Rational& q) const {
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % m, den = q.get_den() % m;
    if (num < 0) num += m;
    if (den == 0) throw InputError("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p_));
    return value_type(num.get_ui(), p_) / value_type(den.get_ui(), p_);
  }
  value_type parse(std::string_view s) const { return from_rational(parse_rational(s)); }
  bool is_zero(const value_type& v) const { return v.value() == 0; }
  std::string format(const value_type& v) const { return std::to_string(v.value()); }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "p:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F f, typename F::value_type a, std::string_view s) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(1L) } -> std::same_as<typename F::value_type>;
  { f.parse(s) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
};

}  // namespace grpi
