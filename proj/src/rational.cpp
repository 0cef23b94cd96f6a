#include "pvitau/rational.hpp"

#include <cctype>

#include "pvitau/errors.hpp"

namespace pvitau {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational x(num, den);
  x.canonicalize();
  return x;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num))
    throw InvalidArgument("malformed rational: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(den))
    throw InvalidArgument("malformed rational: " + std::string(text));
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational binomial(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < k; ++i) num *= x - i;
  return num / Rational(factorial(k));
}

Rational pochhammer(const Rational& x, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= x + i;
  return r;
}

Integer factorial(long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k < 0 ? 0 : k));
  return f;
}

Rational pow(const Rational& x, int e) {
  if (e < 0) {
    if (x == 0) throw InvalidArgument("zero to a negative power");
    return Rational(1) / pow(x, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

}  // namespace pvitau
