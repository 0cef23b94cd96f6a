#include "pvitau/backlund.hpp"

#include <vector>

#include "pvitau/errors.hpp"
#include "pvitau/pvi_equation.hpp"

namespace pvitau {

std::string to_string(UVReading r) { return r == UVReading::printed ? "printed" : "corrected"; }
std::string to_string(BReading r) { return r == BReading::printed ? "printed" : "corrected"; }
std::string to_string(CollapseReading r) {
  return r == CollapseReading::printed ? "printed" : "alternative";
}
std::string to_string(HodeReading r) { return r == HodeReading::printed ? "printed" : "alternative"; }

namespace {

template <class E>
E parse_two(std::string_view s, std::string_view a, std::string_view b, const char* what) {
  if (s == a) return static_cast<E>(0);
  if (s == b) return static_cast<E>(1);
  throw InvalidArgument(std::string("unknown ") + what + " reading '" + std::string(s) + "'");
}

}  // namespace

UVReading parse_uv_reading(std::string_view s) {
  return parse_two<UVReading>(s, "printed", "corrected", "U/V");
}
BReading parse_b_reading(std::string_view s) {
  return parse_two<BReading>(s, "printed", "corrected", "B+");
}
CollapseReading parse_collapse_reading(std::string_view s) {
  return parse_two<CollapseReading>(s, "printed", "alternative", "collapse");
}
HodeReading parse_hode_reading(std::string_view s) {
  return parse_two<HodeReading>(s, "printed", "alternative", "h-equation");
}

namespace {

template <class F>
F k(const Rational& x) {
  return F(x);
}

// Polynomial in a formal momentum P with coefficients in F.
template <class F>
struct PolyP {
  std::vector<F> c;

  static PolyP var() { return {{k<F>(0), k<F>(1)}}; }
  PolyP() = default;
  PolyP(std::vector<F> v) : c(std::move(v)) {}  // NOLINT implicit
  PolyP(const F& x) : c{x} {}                   // NOLINT implicit

  friend PolyP operator+(const PolyP& a, const PolyP& b) {
    PolyP r;
    r.c.assign(std::max(a.c.size(), b.c.size()), k<F>(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
  }
  friend PolyP operator-(const PolyP& a, const PolyP& b) { return a + b * PolyP(k<F>(-1)); }
  friend PolyP operator*(const PolyP& a, const PolyP& b) {
    PolyP r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, k<F>(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
  }
  F at(const F& p) const {
    F acc = k<F>(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * p + c[i];
    return acc;
  }
};

template <class F>
struct Uv {
  PolyP<F> U, V;
};

template <class F>
Uv<F> uv_polys(const F& q, const F& t, const OkamotoParams& b, UVReading reading) {
  using PP = PolyP<F>;
  const F one = k<F>(1);
  const Rational B3 = b.b3 + 1, s14 = b.b1 + b.b4;
  const F qm1 = q - one, qmt = q - t, tm1 = t - one;
  const PP P = PP::var();

  F x1 = reading == UVReading::corrected ? k<F>(b.b1 - b.b3 - 1) * tm1 - k<F>(s14) * qm1
                                         : k<F>(-B3) * tm1 - k<F>(s14) * qm1;
  PP f1 = P * PP(qm1 * qmt) + PP(x1);
  F g0 = k<F>(-s14) * q * qm1 - k<F>(B3) * q * tm1 + k<F>(b.b1) * t * qm1 + k<F>(b.b2) * qmt;
  PP g = P * PP(q * qm1 * qmt) + PP(g0);
  PP U = PP(t) * f1 * g;

  F lin = k<F>(2 * s14) * q * q - (k<F>(b.b1 + b.b2 + 2 * b.b4) + k<F>(2 * b.b1) * t) * q +
          k<F>(b.b1 + b.b2) * t;
  F last = k<F>(s14) * (k<F>(2 * b.b1) * t + k<F>(b.b2 + b.b4));
  if (reading == UVReading::corrected) last = last * q;
  F v0 = k<F>(b.b1 * b.b1 - B3 * B3) * t * t +
         k<F>(b.b1 * b.b2 + b.b1 * b.b4 + b.b2 * b.b4 + B3 * B3) * t + k<F>(s14 * s14) * q * q - last;
  PP inner = P * P * PP(q * qm1 * qmt * qmt) - P * PP(qmt * lin) + PP(v0);
  PP V = PP(qmt) * inner;
  return {U, V};
}

// Numerator and denominator of the collapsed intermediate fraction.
template <class F>
std::pair<F, F> collapsed_parts(const F& p, const F& q, const F& t, const OkamotoParams& b,
                                CollapseReading reading) {
  const F one = k<F>(1);
  const Rational s14 = b.b1 + b.b4, s12 = b.b1 + b.b2;
  const F qm1 = q - one, qmt = q - t;
  const F base = p * q * qm1 * qmt - k<F>(s14) * q * q - k<F>(s12) * t;
  const F den_mid = k<F>(2 * b.b1) * t + k<F>(b.b2 + b.b4);
  const F mid = reading == CollapseReading::printed ? k<F>(2 * b.b1 + b.b4 + b.b2) : den_mid;
  return {t * qm1 * (base + mid * q), qmt * (base + den_mid * q)};
}

template <class F>
F g_of_q(const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1);
  return k<F>(b.b1 + b.b2) * (q - one) * (q - t) + k<F>(b.b1 - b.b2) * q * (q - t) +
         k<F>(b.b3 + b.b4) * q * (q - one);
}

template <class F>
F ham(const F& p, const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1);
  return (q * (q - one) * (q - t) * p * p - p * g_of_q(q, t, b) +
          k<F>((b.b1 + b.b3) * (b.b1 + b.b4)) * (q - t)) /
         (t * (t - one));
}

template <class F>
F ham_p(const F& p, const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1);
  return (k<F>(2) * p * q * (q - one) * (q - t) - g_of_q(q, t, b)) / (t * (t - one));
}

template <class F>
F ham_q(const F& p, const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1), two = k<F>(2);
  F df = k<F>(3) * q * q - two * (one + t) * q + t;
  F dg = k<F>(b.b1 + b.b2) * (two * q - one - t) + k<F>(b.b1 - b.b2) * (two * q - t) +
         k<F>(b.b3 + b.b4) * (two * q - one);
  return (p * p * df - p * dg + k<F>((b.b1 + b.b3) * (b.b1 + b.b4))) / (t * (t - one));
}

Rational e2(const OkamotoParams& b) {
  return b.b1 * b.b2 + b.b1 * b.b3 + b.b1 * b.b4 + b.b2 * b.b3 + b.b2 * b.b4 + b.b3 * b.b4;
}

Rational e3(const OkamotoParams& b) {
  return b.b1 * b.b2 * b.b3 + b.b1 * b.b2 * b.b4 + b.b1 * b.b3 * b.b4 + b.b2 * b.b3 * b.b4;
}

template <class F>
F h_of(const F& p, const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1);
  return t * (t - one) * ham(p, q, t, b) + k<F>(b.b1 * b.b3 + b.b1 * b.b4 + b.b3 * b.b4) * t -
         k<F>(e2(b) / 2);
}

template <class F>
F hplus_of(const F& p, const F& q, const F& t, const OkamotoParams& b) {
  const F one = k<F>(1);
  return h_of(p, q, t, b) - p * q * (q - one) + k<F>(b.b1 + b.b4) * q -
         k<F>((b.b1 + b.b2 + b.b4) / 2);
}

template <class F>
struct Abc {
  F A, B, C;
};

template <class F>
Abc<F> abc_parts(const F& hp, const F& t, const OkamotoParams& b, BReading reading) {
  const F one = k<F>(1);
  const OkamotoParams bp{b.b1, b.b2, b.b3 + 1, b.b4};
  F dh = hp.derivative();
  F d2h = dh.derivative();
  Rational coef = reading == BReading::corrected ? bp.b1 + bp.b2 + bp.b3 + bp.b4
                                                 : b.b1 + b.b2 + b.b3 + b.b4;
  F A = (dh + k<F>(bp.b3 * bp.b3)) * (dh + k<F>(b.b4 * b.b4));
  F B = t * (t - one) * d2h + k<F>(coef) * dh - k<F>(e3(bp));
  F C = k<F>(2) * (t * dh - hp) - k<F>(e2(bp));
  return {A, B, C};
}

template <class F>
F abc_quotient(const F& hp, const Abc<F>& x, const OkamotoParams& b) {
  const Rational B3 = b.b3 + 1;
  F dh = hp.derivative();
  return (k<F>(B3 + b.b4) * x.B + (dh - k<F>(B3 * b.b4)) * x.C) / (k<F>(2) * x.A);
}

void require_nondegenerate(const RatFunc& q) {
  const RatFunc t = RatFunc::t();
  if (q.is_zero() || q == RatFunc(1L) || q == t)
    throw DegenerateQ("q is identically 0, 1 or t: " + q.to_string());
}

void require_collapse_chart(const OkamotoParams& b) {
  if (b.b1 != b.b3 + 1)
    throw ChartViolation("collapse needs b1 = b3 + 1, got b = " + b.to_string());
}

// Synthetic division of a polynomial in P by (P - p0); drops the remainder.
PolyP<RatFunc> deflate(const PolyP<RatFunc>& a, const RatFunc& p0) {
  if (a.c.size() <= 1) return PolyP<RatFunc>(std::vector<RatFunc>{});
  std::vector<RatFunc> out(a.c.size() - 1);
  RatFunc carry(0L);
  for (std::size_t i = a.c.size(); i-- > 1;) {
    carry = carry * p0 + a.c[i];
    out[i - 1] = carry;
  }
  return PolyP<RatFunc>(std::move(out));
}

}  // namespace

RatFunc hamiltonian_H(const RatFunc& p, const RatFunc& q, const OkamotoParams& b) {
  require_nondegenerate(q);
  return ham(p, q, RatFunc::t(), b);
}

RatFunc riccati_residual(const RatFunc& q, const OkamotoParams& b) {
  const RatFunc t = RatFunc::t();
  RatFunc rhs = (RatFunc(b.b4 - b.b3) * q * q +
                 (RatFunc(Rational(2 * b.b1)) * t + RatFunc(Rational(b.b2 - b.b4 - 1))) * q -
                 RatFunc(Rational(b.b1 + b.b2)) * t) /
                (t * (t - RatFunc(1L)));
  return q.derivative() - rhs;
}

RatFunc p_long_form(const RatFunc& q, const OkamotoParams& b) {
  require_nondegenerate(q);
  const RatFunc t = RatFunc::t(), one(1L);
  const RatFunc qm1 = q - one, qmt = q - t;
  return t * (t - one) * q.derivative() / (RatFunc(2L) * q * qm1 * qmt) +
         RatFunc(make_rational(1, 2)) *
             (RatFunc(Rational(b.b1 + b.b2)) / q + RatFunc(Rational(b.b1 - b.b2)) / qm1 +
              RatFunc(Rational(b.b3 + b.b4)) / qmt);
}

RatFunc p_from_seed(const RatFunc& q, const OkamotoParams& b) {
  require_nondegenerate(q);
  RatFunc res = riccati_residual(q, b);
  if (!res.is_zero()) throw RiccatiViolation("Riccati residual " + res.to_string());
  RatFunc p = RatFunc(Rational(b.b1 + b.b4)) / (q - RatFunc::t());
  if (p_long_form(q, b) != p)
    throw RiccatiViolation("long and short forms of p disagree");
  return p;
}

RatFunc hamiltonian_flow_residual(const RatFunc& p, const RatFunc& q, const OkamotoParams& b) {
  require_nondegenerate(q);
  return q.derivative() - ham_p(p, q, RatFunc::t(), b);
}

HamiltonianData hamiltonian_data(const RatFunc& p, const RatFunc& q, const OkamotoParams& b) {
  require_nondegenerate(q);
  const RatFunc t = RatFunc::t();
  HamiltonianData d;
  d.H = ham(p, q, t, b);
  d.h = t * (t - RatFunc(1L)) * d.H + RatFunc(Rational(b.b1 * b.b3 + b.b1 * b.b4 + b.b3 * b.b4)) * t -
        RatFunc(Rational(e2(b) / 2));
  d.hplus = d.h - p * q * (q - RatFunc(1L)) + RatFunc(Rational(b.b1 + b.b4)) * q -
            RatFunc(Rational((b.b1 + b.b2 + b.b4) / 2));
  return d;
}

RatFunc backlund_qplus(const RatFunc& p, const RatFunc& q, const OkamotoParams& b,
                       UVReading reading) {
  require_nondegenerate(q);
  Uv<RatFunc> uv = uv_polys(q, RatFunc::t(), b, reading);
  for (int pass = 0; pass < 3; ++pass) {
    RatFunc u = uv.U.at(p), v = uv.V.at(p);
    if (!v.is_zero()) return u / v;
    if (!u.is_zero()) throw DegenerateTransformation("V vanishes while U does not");
    uv.U = deflate(uv.U, p);
    uv.V = deflate(uv.V, p);
    if (uv.V.c.empty()) break;
  }
  throw DegenerateTransformation("U and V vanish identically in p");
}

RatFunc backlund_qplus_abc(const RatFunc& q, const OkamotoParams& b, BReading reading) {
  RatFunc p = p_long_form(q, b);
  const RatFunc t = RatFunc::t();
  RatFunc hp = hplus_of(p, q, t, b);
  Abc<RatFunc> x = abc_parts(hp, t, b, reading);
  if (x.A.is_zero()) throw DegenerateTransformation("A+ vanishes identically");
  return abc_quotient(hp, x, b);
}

RatFunc qplus_collapsed(const RatFunc& p, const RatFunc& q, const OkamotoParams& b,
                        CollapseReading reading) {
  require_collapse_chart(b);
  auto [num, den] = collapsed_parts(p, q, RatFunc::t(), b, reading);
  if (den.is_zero()) throw DegenerateTransformation("collapsed denominator vanishes");
  return num / den;
}

RatFunc q1_collapsed(const RatFunc& q, const OkamotoParams& b) {
  require_collapse_chart(b);
  const RatFunc t = RatFunc::t();
  const Rational s12 = b.b1 + b.b2;
  RatFunc den = (RatFunc(Rational(2 * b.b1)) * t + RatFunc(Rational(b.b2 - b.b1))) * q -
                RatFunc(s12) * t;
  if (den.is_zero()) throw DegenerateTransformation("q1 denominator vanishes");
  return RatFunc(s12) * t * (q - RatFunc(1L)) / den;
}

Rational collapse_cross_residual(const Rational& p, const Rational& q, const Rational& t,
                                 const OkamotoParams& b, UVReading uv, CollapseReading reading) {
  require_collapse_chart(b);
  Uv<Rational> x = uv_polys(q, t, b, uv);
  auto [num, den] = collapsed_parts(p, q, t, b, reading);
  return x.U.at(p) * den - x.V.at(p) * num;
}

RatFunc hamiltonian_after_shift(const RatFunc& p, const RatFunc& q, const OkamotoParams& b) {
  const RatFunc t = RatFunc::t();
  return hamiltonian_H(p, q, b) -
         (p * q * (q - RatFunc(1L)) - RatFunc(Rational(b.b1 + b.b4)) * (q - t)) /
             (t * (t - RatFunc(1L)));
}

H1Data h1_and_tau1(const OkamotoParams& b) {
  require_collapse_chart(b);
  const RatFunc t = RatFunc::t();
  const Rational s14 = b.b1 + b.b4;
  H1Data d;
  d.H1 = RatFunc(Rational(-(b.b1 + b.b2) * s14)) / t -
         RatFunc(Rational((b.b1 - b.b2) * s14)) / (t - RatFunc(1L));
  d.tau1_exponents = {-(b.b1 + b.b2) * s14, -(b.b1 - b.b2) * s14};
  d.sigma1_exponents = {-(b.b1 + b.b2) * (s14 + 1), -(b.b1 - b.b2) * (s14 + 1)};
  return d;
}

RatFunc PolyTimesExponents::log_derivative() const {
  if (poly.is_zero()) throw InvalidArgument("log derivative of zero");
  const RatFunc t = RatFunc::t();
  return RatFunc(poly.derivative(), poly) + RatFunc(e_t) / t + RatFunc(e_t1) / (t - RatFunc(1L));
}

std::pair<Rational, Rational> ansatz_exponents(int n, const OkamotoParams& b) {
  const Rational s14 = b.b1 + b.b4;
  return {-s14 * (b.b1 + b.b2 + n - 1), -s14 * (b.b1 - b.b2 + n - 1)};
}

PolyTimesExponents tau_implant(const Poly& T, int n, const OkamotoParams& b) {
  auto [a, c] = ansatz_exponents(n, b);
  return {T, a, c};
}

Poly tau_extract(const PolyTimesExponents& tau, int n, const OkamotoParams& b) {
  auto [a, c] = ansatz_exponents(n, b);
  if (tau.e_t != a || tau.e_t1 != c)
    throw InvalidArgument("exponents (" + to_string(tau.e_t) + "," + to_string(tau.e_t1) +
                          ") do not match the ansatz at n=" + std::to_string(n));
  return tau.poly;
}

Poly prop1_residual(const SeedParams& p) {
  Poly w = w_poly(p.r, p.m, p.s);
  if (w.is_zero()) throw ParameterPole("W(r,m,s) vanishes identically");
  Poly z = hypergeom_z(p);
  const Poly t = Poly::t(), one(1L);
  Poly dz = z.derivative();
  Poly den = dz.scaled(p.s - p.r - 1) + (t * dz + z.scaled(p.r)).scaled(p.r + p.m + 1);
  if (den.is_zero()) throw ParameterPole("closed form has a vanishing denominator");
  Poly num = z.scaled(p.r * (p.m + p.s)) - (t * ((t - one) * dz + z.scaled(p.r))).scaled(p.r + p.m + 1);
  const RatFunc T(t), T1(t - one);
  RatFunc closed = RatFunc(Rational(-p.s)) / T + RatFunc(Rational(p.m - p.r + p.s - 1)) / T1 -
                   RatFunc(Rational(p.r + 1)) / (T * T1) * RatFunc(num, den);
  RatFunc res = RatFunc(w.derivative(), w) - closed;
  return res.num();
}

RatFunc h_sigma_residual(const RatFunc& h, const OkamotoParams& b, HodeReading reading) {
  const RatFunc t = RatFunc::t(), one(1L);
  RatFunc d1 = h.derivative(), d2 = d1.derivative();
  RatFunc u = t * t * (t - one) * (t - one);
  RatFunc first = reading == HodeReading::printed ? u * d1 * d2 * d2 : u * d1 * d1 * d2;
  RatFunc inner = (RatFunc(2L) * h - (RatFunc(2L) * t - one) * d1) * d1 +
                  RatFunc(Rational(b.b1 * b.b2 * b.b3 * b.b4));
  RatFunc lhs = first + inner * inner;
  RatFunc rhs = (d1 + RatFunc(Rational(b.b1 * b.b1))) * (d1 + RatFunc(Rational(b.b2 * b.b2))) *
                (d1 + RatFunc(Rational(b.b3 * b.b3))) * (d1 + RatFunc(Rational(b.b4 * b.b4)));
  return lhs - rhs;
}

namespace {

Series truncate(const Series& s, int order) {
  std::vector<Rational> c;
  const int n = std::min(order, s.prec());
  for (int i = 0; i < n; ++i) c.push_back(s.coeff(i));
  return Series(std::move(c), order);
}

}  // namespace

FlowSeries hamiltonian_flow(const PhasePoint& x, const OkamotoParams& b, int order) {
  if (order < 1) throw InvalidArgument("flow order must be >= 1");
  if (sgn(x.t) == 0 || x.t == 1) throw InvalidArgument("flow base point must avoid t = 0, 1");
  FlowSeries f{Series({x.p}, order), Series({x.q}, order), Series::variable(x.t, order)};
  for (int i = 0; i < order; ++i) {
    Series qn = truncate(ham_p(f.p, f.q, f.t, b).integral(x.q), order);
    Series pn = truncate((-ham_q(f.p, f.q, f.t, b)).integral(x.p), order);
    f.q = qn;
    f.p = pn;
  }
  return f;
}

PhaseSpaceCheck phase_space_check(const PhasePoint& x, const OkamotoParams& b, UVReading uv,
                                  BReading br, int order) {
  FlowSeries f = hamiltonian_flow(x, b, order);
  const OkamotoParams bp{b.b1, b.b2, b.b3 + 1, b.b4};
  PhaseSpaceCheck out;
  out.q = f.q;
  Uv<Series> polys = uv_polys(f.q, f.t, b, uv);
  out.qplus_uv = polys.U.at(f.p) / polys.V.at(f.p);
  Series hp = hplus_of(f.p, f.q, f.t, b);
  out.qplus_abc = abc_quotient(hp, abc_parts(hp, f.t, b, br), b);
  out.routes_agree = out.qplus_uv.agrees_with(out.qplus_abc);
  auto residual = [&f](const Series& q, const OkamotoParams& c) {
    Series d1 = q.derivative();
    return pvi_expression(q, d1, d1.derivative(), f.t, pvi_params_from_okamoto(c, 0));
  };
  out.residual_q = residual(f.q, b);
  out.residual_uv = residual(out.qplus_uv, bp);
  out.residual_abc = residual(out.qplus_abc, bp);
  return out;
}

}  // namespace pvitau
