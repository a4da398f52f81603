#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thv {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Integer value when this is an integer fitting in a long.
  std::optional<long> to_long() const;
  /// Floor and ceiling as longs; throw std::overflow_error when out of range.
  long floor() const;
  long ceil() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(unsigned e) const;

  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const;
  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient binom(x, k) = x(x-1)...(x-k+1)/k!.
Rational binomial(const Rational& x, unsigned k);

}  // namespace thv

template <>
struct std::hash<thv::Rational> {
  std::size_t operator()(const thv::Rational& r) const noexcept { return r.hash(); }
};
