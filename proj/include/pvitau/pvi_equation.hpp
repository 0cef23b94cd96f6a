#pragma once

#include "pvitau/seeds.hpp"

namespace pvitau {

// q'' - RHS of P_VI(alpha, beta, gamma, delta) over any field of functions
// of t (RatFunc, Series).
template <class F>
F pvi_expression(const F& q, const F& dq, const F& d2q, const F& t, const PviParams& pv) {
  const F one(Rational(1));
  const F qm1 = q - one, qmt = q - t, tm1 = t - one;
  F rhs = F(Rational(1, 2)) * (one / q + one / qm1 + one / qmt) * dq * dq -
          (one / t + one / tm1 + one / qmt) * dq +
          q * qm1 * qmt / (t * t * tm1 * tm1) *
              (F(pv.alpha) + F(pv.beta) * t / (q * q) + F(pv.gamma) * tm1 / (qm1 * qm1) +
               F(pv.delta) * t * tm1 / (qmt * qmt));
  return d2q - rhs;
}

}  // namespace pvitau
