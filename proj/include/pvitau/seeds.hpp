#pragma once

#include <string>

#include "pvitau/param_poly.hpp"
#include "pvitau/poly.hpp"
#include "pvitau/ratfunc.hpp"

namespace pvitau {

struct SeedParams {
  Rational r;
  int m = 1;
  Rational s;
  std::string to_string() const;
};

struct OkamotoParams {
  Rational b1, b2, b3, b4;
  std::string to_string() const;
};

struct PviParams {
  Rational alpha, beta, gamma, delta;
  friend bool operator==(const PviParams& a, const PviParams& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.delta == b.delta;
  }
  std::string to_string() const;
};

// W(r,m,s) = sum_j (-1)^j C(r+m+1-j, m-j) C(s+m, j) t^{m-j}.
Poly w_poly(const Rational& r, int m, const Rational& s);
ParamPoly w_poly_generic(int m);

// Terminating 2F1(r, -m; s; t); ParameterPole when C(s+j-1, j) = 0.
Poly hypergeom_z(const SeedParams& p);
// Residual of t(1-t)z'' + (s - (r-m+1)t)z' + sign*m*r*z with sign = +1 as
// printed; sign = -1 is the alternative reading.
Poly hypergeom_ode_residual(const SeedParams& p, int sign = 1);

// V(a,m,b,n) = sum_{j<=b} (-1)^{j+1} C(n+m+a, b-j) C(a+j, j) t^j.
Poly v_poly(const Rational& a, int m, int b, int n);

OkamotoParams chart_okamoto(const SeedParams& p);
SeedParams chart_sigma_shift(const SeedParams& p);
SeedParams chart_sigma_unshift(const SeedParams& p);

PviParams pvi_params_at(int n, const SeedParams& p);
// Same parameters through the Okamoto chart with b3 -> b3 + n.
PviParams pvi_params_from_okamoto(const OkamotoParams& b, int n);

// q = t + t(t-1) z'/(r z).
RatFunc seed_q(const SeedParams& p);

// LHS - RHS of (s-r-1)z' + (r+m+1)(tz' + rz) = (-1)^m m! r(r+1)/(s)_m W.
Poly lemma1_residual(const SeedParams& p);

}  // namespace pvitau
