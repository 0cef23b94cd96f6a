#pragma once

#include <string>
#include <string_view>

#include "pvitau/poly.hpp"
#include "pvitau/ratfunc.hpp"
#include "pvitau/report.hpp"
#include "pvitau/seeds.hpp"
#include "pvitau/sequence_io.hpp"
#include "pvitau/toda.hpp"

namespace pvitau {

// q'' - RHS(q, q', t) of P_VI, reduced. DegenerateQ for constant q or q = t.
RatFunc pvi_residual(const RatFunc& q, const PviParams& pv);

// Residual for q = num/den multiplied through by 2t^2(t-1)^2 den^6 q(q-1)(q-t);
// a polynomial, zero iff q solves P_VI (constant q included).
Poly pvi_cleared_residual(const Poly& num, const Poly& den, const PviParams& pv);
Poly pvi_cleared_residual(const RatFunc& q, const PviParams& pv);

// Additive shifts of (alpha, beta, gamma, delta) for negative controls.
struct PviPerturbation {
  Rational alpha, beta, gamma, delta;
  bool any() const;
  PviParams apply(PviParams pv) const;
  // "alpha=+1", "gamma=-1/2"; several joined by ','.
  static PviPerturbation parse(std::string_view text);
  std::string to_string() const;
};

// q_n = num/den over T_{n+1} and S_n (primitive parts), integer coefficients,
// not reduced.
struct QnParts {
  Poly num, den;
};
QnParts qn_theorem_parts(int n, const TauSequence& T, const TauSequence& S);
RatFunc qn_from_theorem(int n, const TauSequence& T, const TauSequence& S);

// ((m+s)/(n+r)) T_n(r,m+1,s) T_{n+1}(r-1,m,s-1) / (T_{n+1}(r,m,s) T_n(r-1,m+1,s-1))
// with T_2 = W and c(n) = (n-1)(n+r) in every factor.
RatFunc qn_product_conj1(int n, const SeedParams& p, SequenceCache& cache);

// V(r+1,m,m+1,n)V(r,m,m,n) / (V(r+1,m,m,n)V(r,m,m+1,n))
RatFunc prop2_qn(int n, const Rational& r, int m);
// ((n+r)^2/2, -(m+r+2)^2/2, gamma, (1-(n+m)^2)/2)
PviParams prop2_params(int n, const Rational& r, int m, const Rational& gamma);

struct FactorCheck {
  Family family = Family::T;
  int n = 0;
  int exponent = 0;         // m(n-2), (m+1)(n-2) for S
  bool divisible = false;
  int quotient_degree = -1;
  int expected_degree = 0;  // m, m+1 for S
  bool ok() const { return divisible && quotient_degree == expected_degree; }
};
// Sequences at s = r+2, raw normalization.
FactorCheck example1_factor_check(Family f, int n, const Rational& r, int m);

// f f'' - f'^2 + 3f'g - 2f g' - 2g^2 + 2f
Poly polynomiality_condition(const Poly& f, const Poly& g);

// q_n against P_VI(pvi_params_at(n, p)) perturbed; flagged when q_n is
// constant and the residual vanishes.
VerificationReport verify_theorem_qn(int n, const TauSequence& T, const TauSequence& S,
                                     const PviPerturbation& perturb = {});

std::string params_label(const SeedParams& p);

}  // namespace pvitau
