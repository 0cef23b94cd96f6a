#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "pvitau/poly.hpp"
#include "pvitau/ratfunc.hpp"
#include "pvitau/seeds.hpp"
#include "pvitau/series.hpp"

namespace pvitau {

// Readings of the printed formulas that were found to disagree with the
// P_VI residual. `corrected` is the default everywhere.
enum class UVReading { printed, corrected };
enum class BReading { printed, corrected };
// Factor multiplying q in the collapsed numerator: printed (2b1+b4+b2),
// alternative (2b1t+b2+b4).
enum class CollapseReading { printed, alternative };
// First term of the h-equation: printed t^2(t-1)^2 h'(h'')^2, alternative
// t^2(t-1)^2 (h')^2 h''.
enum class HodeReading { printed, alternative };

std::string to_string(UVReading r);
std::string to_string(BReading r);
std::string to_string(CollapseReading r);
std::string to_string(HodeReading r);
UVReading parse_uv_reading(std::string_view s);
BReading parse_b_reading(std::string_view s);
CollapseReading parse_collapse_reading(std::string_view s);
HodeReading parse_hode_reading(std::string_view s);

// Okamoto Hamiltonian H(p, q, t; b). DegenerateQ when q is 0, 1 or t.
RatFunc hamiltonian_H(const RatFunc& p, const RatFunc& q, const OkamotoParams& b);

// q' - {(b4-b3)q^2 + (2b1t+b2-b4-1)q - (b1+b2)t}/(t(t-1))
RatFunc riccati_residual(const RatFunc& q, const OkamotoParams& b);

// p = t(t-1)q'/(2q(q-1)(q-t)) + (1/2)((b1+b2)/q + (b1-b2)/(q-1) + (b3+b4)/(q-t)),
// the inverse of dq/dt = dH/dp. DegenerateQ.
RatFunc p_long_form(const RatFunc& q, const OkamotoParams& b);

// (b1+b4)/(q-t) for a Riccati solution; RiccatiViolation otherwise or when
// the long form disagrees.
RatFunc p_from_seed(const RatFunc& q, const OkamotoParams& b);

// dq/dt - dH/dp.
RatFunc hamiltonian_flow_residual(const RatFunc& p, const RatFunc& q, const OkamotoParams& b);

struct HamiltonianData {
  RatFunc H, h, hplus;
};
HamiltonianData hamiltonian_data(const RatFunc& p, const RatFunc& q, const OkamotoParams& b);

// U/V with U, V polynomials in a formal p over Q(t). When U and V both
// vanish at the given p the common factor is cancelled and the quotient is
// taken in the limit. DegenerateTransformation when V vanishes alone.
RatFunc backlund_qplus(const RatFunc& p, const RatFunc& q, const OkamotoParams& b,
                       UVReading reading = UVReading::corrected);

// ((b3+1+b4)B + (h+' - (b3+1)b4)C)/(2A) with p from the long form.
// DegenerateTransformation when A vanishes (always the case on seeds).
RatFunc backlund_qplus_abc(const RatFunc& q, const OkamotoParams& b,
                           BReading reading = BReading::corrected);

// The intermediate fraction obtained from U/V at b3 = b1 - 1. ChartViolation.
RatFunc qplus_collapsed(const RatFunc& p, const RatFunc& q, const OkamotoParams& b,
                        CollapseReading reading = CollapseReading::printed);

// (b1+b2)t(q-1)/((2b1t+b2-b1)q - (b1+b2)t). ChartViolation.
RatFunc q1_collapsed(const RatFunc& q, const OkamotoParams& b);

// U*den - V*num at a point of (p, q, t) with b3 = b1 - 1, using the chosen
// readings; zero iff the collapse is an identity there. ChartViolation.
Rational collapse_cross_residual(const Rational& p, const Rational& q, const Rational& t,
                                 const OkamotoParams& b, UVReading uv = UVReading::corrected,
                                 CollapseReading reading = CollapseReading::printed);

// H - (pq(q-1) - (b1+b4)(q-t))/(t(t-1)), the Hamiltonian after the shift.
RatFunc hamiltonian_after_shift(const RatFunc& p, const RatFunc& q, const OkamotoParams& b);

struct H1Data {
  RatFunc H1;
  std::pair<Rational, Rational> tau1_exponents;    // on t and t-1
  std::pair<Rational, Rational> sigma1_exponents;  // b4 -> b4+1
};
H1Data h1_and_tau1(const OkamotoParams& b);  // ChartViolation

// poly(t) * t^e_t * (t-1)^e_t1
struct PolyTimesExponents {
  Poly poly;
  Rational e_t, e_t1;
  RatFunc log_derivative() const;
};
// (-(b1+b4)(b1+b2+n-1), -(b1+b4)(b1-b2+n-1))
std::pair<Rational, Rational> ansatz_exponents(int n, const OkamotoParams& b);
PolyTimesExponents tau_implant(const Poly& T, int n, const OkamotoParams& b);
// InvalidArgument when the exponents do not match the ansatz at n.
Poly tau_extract(const PolyTimesExponents& tau, int n, const OkamotoParams& b);

// Numerator of T2'/T2 minus the closed form in z, z' with T2 = W(r,m,s).
// ParameterPole when the closed form has a vanishing denominator.
Poly prop1_residual(const SeedParams& p);

// LHS - RHS of the h-equation.
RatFunc h_sigma_residual(const RatFunc& h, const OkamotoParams& b,
                         HodeReading reading = HodeReading::printed);

// Local solution of the Hamiltonian system through (p0, q0) at t0, as
// power series in t - t0 with `order` coefficients.
struct PhasePoint {
  Rational p, q, t;
};
struct FlowSeries {
  Series p, q, t;
};
FlowSeries hamiltonian_flow(const PhasePoint& x, const OkamotoParams& b, int order);

// Both routes to q+ along the flow through a phase-space point, and the
// P_VI(b3+1) residuals they leave.
struct PhaseSpaceCheck {
  Series q, qplus_uv, qplus_abc;
  Series residual_q, residual_uv, residual_abc;
  bool routes_agree = false;
};
PhaseSpaceCheck phase_space_check(const PhasePoint& x, const OkamotoParams& b,
                                  UVReading uv = UVReading::corrected,
                                  BReading br = BReading::corrected, int order = 10);

}  // namespace pvitau
