#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvitau/rational.hpp"

namespace pvitau {

// Dense univariate polynomial in t over Q, coefficients ascending.
// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  using scalar_type = Rational;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT implicit
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT implicit
  explicit Poly(std::vector<Rational> coeffs);
  static Poly from_ints(std::initializer_list<long> ascending);
  static Poly monomial(const Rational& c, int degree);
  static Poly t() { return monomial(Rational(1), 1); }
  // Parses expressions such as "5t^2 - 5t + 1" or "-3/2*t^3+t".
  static Poly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_integral() const;

  Poly derivative() const;
  Rational evaluate(const Rational& x) const;
  Poly compose(const Poly& inner) const;
  Poly monic() const;
  Poly shifted(int k) const;  // multiply by t^k
  Poly scaled(const Rational& s) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;
  std::vector<std::string> coeff_strings() const;
  static Poly from_coeff_strings(const std::vector<std::string>& coeffs);

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& a, int e);

struct DivRem {
  Poly quotient;
  Poly remainder;
};
DivRem divrem(const Poly& a, const Poly& b);

// Returns q with a = q*b; throws NonExactDivision otherwise.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
bool coprime(const Poly& a, const Poly& b);

struct ContentPrimitive {
  Integer content;
  Poly primitive;
};
// Integer coefficients only (NonIntegralInput). Content is nonnegative and
// the primitive part keeps the sign of the input.
ContentPrimitive content_primitive(const Poly& a);
Integer content(const Poly& a);

// Scales a nonzero polynomial to integer coefficients with content 1 and
// positive leading coefficient.
Poly primitive_integer_part(const Poly& a);
// Least common multiple of coefficient denominators.
Integer denominator_lcm(const Poly& a);

Rational resultant(const Poly& a, const Poly& b);
// (-1)^{d(d-1)/2} res(a, a') / lc(a); throws ConstantPolynomial.
Rational discriminant(const Poly& a);

namespace detail {
extern std::size_t karatsuba_threshold;
std::vector<Integer> mul_integer(const std::vector<Integer>& a,
                                 const std::vector<Integer>& b);
}  // namespace detail

}  // namespace pvitau
