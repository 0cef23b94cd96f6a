#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pvitau/rational.hpp"

namespace pvitau {

// Exponent pair (deg_r, deg_s).
using Monomial = std::pair<int, int>;

// Graded lexicographic with r > s; the map iterates from the largest term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

// Polynomial in the parameters r, s over Q.
class MPoly2 {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  MPoly2() = default;
  MPoly2(const Rational& c);  // NOLINT implicit
  MPoly2(long c) : MPoly2(Rational(c)) {}  // NOLINT implicit
  static MPoly2 r();
  static MPoly2 s();
  static MPoly2 term(const Rational& c, int er, int es);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of r^0 s^0
  const Terms& terms() const { return terms_; }
  std::pair<Monomial, Rational> leading_term() const;
  int total_degree() const;

  Rational evaluate(const Rational& r0, const Rational& s0) const;
  MPoly2 scaled(const Rational& c) const;
  bool has_integer_coefficients() const;

  friend MPoly2 operator+(const MPoly2& a, const MPoly2& b);
  friend MPoly2 operator-(const MPoly2& a, const MPoly2& b);
  friend MPoly2 operator*(const MPoly2& a, const MPoly2& b);
  MPoly2 operator-() const;
  MPoly2& operator+=(const MPoly2& o);
  MPoly2& operator-=(const MPoly2& o);
  friend bool operator==(const MPoly2& a, const MPoly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly2& a, const MPoly2& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

// Quotient when b divides a in Q[r,s]; nullopt otherwise.
std::optional<MPoly2> divide_exact(const MPoly2& a, const MPoly2& b);

// Fraction num/den of MPoly2. Reduced by content and by exact division;
// den is primitive over Z with positive leading term in grlex order.
class ParamScalar {
 public:
  ParamScalar() : den_(1L) {}
  ParamScalar(const MPoly2& num) : num_(num), den_(1L) {}  // NOLINT implicit
  ParamScalar(const Rational& c) : num_(c), den_(1L) {}  // NOLINT implicit
  ParamScalar(long c) : ParamScalar(Rational(c)) {}  // NOLINT implicit
  ParamScalar(const MPoly2& num, const MPoly2& den);
  static ParamScalar r() { return ParamScalar(MPoly2::r()); }
  static ParamScalar s() { return ParamScalar(MPoly2::s()); }

  const MPoly2& num() const { return num_; }
  const MPoly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  Rational evaluate(const Rational& r0, const Rational& s0) const;  // ParameterPole

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b);
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Normalized {};
  ParamScalar(MPoly2 num, MPoly2 den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}
  MPoly2 num_;
  MPoly2 den_;
};

}  // namespace pvitau
