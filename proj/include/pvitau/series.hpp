#pragma once

#include <climits>
#include <string>
#include <vector>

#include "pvitau/rational.hpp"

namespace pvitau {

// Truncated power series in eps over Q. prec() is the number of valid
// coefficients; kExact marks a polynomial known exactly (scalars).
class Series {
 public:
  static constexpr int kExact = INT_MAX;

  Series() : Series(Rational(0)) {}
  Series(const Rational& c) : c_{c}, prec_(kExact) { trim(); }  // NOLINT implicit
  Series(long c) : Series(Rational(c)) {}  // NOLINT implicit
  Series(std::vector<Rational> coeffs, int prec);
  // c0 + eps, valid to prec coefficients.
  static Series variable(const Rational& c0, int prec);

  int prec() const { return prec_; }
  Rational coeff(int i) const;
  Rational value() const { return coeff(0); }
  // k-th derivative at eps = 0.
  Rational derivative_at(int k) const;

  Series derivative() const;
  Series integral(const Rational& c0) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  // PoleEvaluation when the divisor vanishes at eps = 0.
  friend Series operator/(const Series& a, const Series& b);
  Series operator-() const;

  // Agreement on the common valid range.
  bool agrees_with(const Series& o) const;
  bool is_zero_to_prec() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
  int prec_;
};

}  // namespace pvitau
