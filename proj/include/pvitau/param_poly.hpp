#pragma once

#include <string>
#include <vector>

#include "pvitau/mpoly.hpp"
#include "pvitau/poly.hpp"

namespace pvitau {

// Polynomial in t whose coefficients are ParamScalar, ascending in t.
class ParamPoly {
 public:
  using scalar_type = ParamScalar;

  ParamPoly() = default;
  ParamPoly(const ParamScalar& c);  // NOLINT implicit
  ParamPoly(long c) : ParamPoly(ParamScalar(c)) {}  // NOLINT implicit
  explicit ParamPoly(std::vector<ParamScalar> coeffs);
  explicit ParamPoly(const Poly& p);
  static ParamPoly monomial(const ParamScalar& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ParamScalar>& coeffs() const { return c_; }
  ParamScalar coeff(int i) const;
  const ParamScalar& leading() const { return c_.back(); }

  ParamPoly derivative() const;
  ParamPoly scaled(const ParamScalar& s) const;
  ParamScalar evaluate_t(const Rational& t0) const;

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<ParamScalar> c_;
};

// Exact division in t; tries polynomial division in Q[r,s,t] first, then
// long division over Q(r,s). Throws NonExactDivision.
ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b);

// Specialization at (r0, s0); throws ParameterPole.
Poly pp_eval(const ParamPoly& a, const Rational& r0, const Rational& s0);

struct ZrstStatus {
  bool in_zrst = true;
  int t_degree = -1;          // offending coefficient index on failure
  std::string witness;        // offending coefficient on failure
};
ZrstStatus pp_is_in_zrst(const ParamPoly& a);

}  // namespace pvitau
