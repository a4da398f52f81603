#include "thv/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "thv/errors.hpp"

namespace thv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string body(s);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  return mpz_class(body, 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, 1) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ /= den;
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) throw ParseError("not a rational: '" + std::string(text) + "'");
  mpz_class num = parse_integer(num_text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+')
      throw ParseError("not a rational: '" + std::string(text) + "'");
    den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(num, den));
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

long Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational::floor out of range");
  return q.get_si();
}

long Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("Rational::ceil out of range");
  return q.get_si();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  // Exact for values whose parts fit a machine word; collisions otherwise are harmless.
  const std::size_t n = mpz_get_si(v_.get_num_mpz_t());
  const std::size_t d = mpz_get_ui(v_.get_den_mpz_t());
  return n * 0x9e3779b97f4a7c15ULL ^ (d + (n << 6) + (n >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(const Rational& x, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= x - Rational(static_cast<long>(i));
    out /= Rational(static_cast<long>(i + 1));
  }
  return out;
}

}  // namespace thv
