#pragma once

#include <vector>

#include "pvitau/poly.hpp"
#include "pvitau/seeds.hpp"
#include "pvitau/toda.hpp"

namespace pvitau {

// poly(t) * (t(t-1))^e
struct FactoredFunction {
  Poly poly;
  Rational e;

  // Moves factors of t(t-1) from poly into e while both t and t-1 divide.
  FactoredFunction canonical() const;
  friend FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b);
  // Compares canonical forms.
  friend bool operator==(const FactoredFunction& a, const FactoredFunction& b);
  std::string to_string() const;
};

// delta = t(t-1) d/dt: poly -> t(t-1) poly' + e (2t-1) poly, e unchanged.
FactoredFunction delta_apply(const FactoredFunction& f);

// Fraction-free determinant of a square polynomial matrix.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

struct HankelResult {
  int n = 0;
  FactoredFunction determinant;  // canonical
  FactoredFunction expected;     // (t(t-1))^{n(n+r+1)/2} T_{n+1}, canonical
  bool proportional = false;
  Rational constant;  // determinant / expected when proportional
};

// n x n determinant of delta^{i+j} applied to W(r,m,s) (t(t-1))^{(r+2)/2},
// compared with the raw T sequence (T_2 = W, c = 1).
HankelResult hankel_check(int n, const SeedParams& p, const TauSequence& T);

}  // namespace pvitau
