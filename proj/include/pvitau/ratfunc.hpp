#pragma once

#include <string>

#include "pvitau/poly.hpp"

namespace pvitau {

// Reduced quotient num/den with den monic.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(const Poly& p) : num_(p), den_(1L) {}  // NOLINT implicit
  RatFunc(const Rational& c) : num_(c), den_(1L) {}  // NOLINT implicit
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT implicit
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc t() { return RatFunc(Poly::t()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc derivative() const;
  Rational evaluate(const Rational& x) const;  // PoleEvaluation at a pole
  RatFunc compose(const Poly& inner) const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& a, int e);

}  // namespace pvitau
