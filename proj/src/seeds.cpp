#include "pvitau/seeds.hpp"

#include "pvitau/errors.hpp"

namespace pvitau {

namespace {

template <class S>
S ring_binomial(const S& x, int k) {
  if (k < 0) return S(Rational(0));
  S acc(Rational(1));
  for (int i = 0; i < k; ++i) acc = acc * (x - S(Rational(i)));
  return acc * S(Rational(1) / Rational(factorial(k)));
}

// Coefficients of W(r,m,s), ascending in t.
template <class S>
std::vector<S> w_coefficients(const S& r, int m, const S& s) {
  std::vector<S> c(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    S term = ring_binomial<S>(r + S(Rational(m + 1 - j)), m - j) *
             ring_binomial<S>(s + S(Rational(m)), j);
    if (j % 2 == 1) term = S(Rational(0)) - term;
    c[static_cast<std::size_t>(m - j)] = term;
  }
  return c;
}

std::string rat(const Rational& x) { return pvitau::to_string(x); }

}  // namespace

std::string SeedParams::to_string() const {
  return "(" + rat(r) + "," + std::to_string(m) + "," + rat(s) + ")";
}

std::string OkamotoParams::to_string() const {
  return "(" + rat(b1) + "," + rat(b2) + "," + rat(b3) + "," + rat(b4) + ")";
}

std::string PviParams::to_string() const {
  return "(" + rat(alpha) + "," + rat(beta) + "," + rat(gamma) + "," + rat(delta) + ")";
}

Poly w_poly(const Rational& r, int m, const Rational& s) {
  if (m < 0) throw InvalidArgument("W(r,m,s) needs m >= 0");
  return Poly(w_coefficients<Rational>(r, m, s));
}

ParamPoly w_poly_generic(int m) {
  if (m < 0) throw InvalidArgument("W(r,m,s) needs m >= 0");
  return ParamPoly(w_coefficients<ParamScalar>(ParamScalar::r(), m, ParamScalar::s()));
}

Poly hypergeom_z(const SeedParams& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.m) + 1);
  for (int j = 0; j <= p.m; ++j) {
    Rational den = binomial(p.s + j - 1, j);
    if (sgn(den) == 0)
      throw ParameterPole("hypergeometric coefficient pole at s=" + rat(p.s));
    Rational v = binomial(p.r + j - 1, j) * binomial(Rational(p.m), j) / den;
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : Rational(-v);
  }
  return Poly(std::move(c));
}

Poly hypergeom_ode_residual(const SeedParams& p, int sign) {
  Poly z = hypergeom_z(p);
  Poly t = Poly::t();
  Poly one(1L);
  Poly coeff1 = Poly(p.s) - (t.scaled(p.r - p.m + 1));
  return (t * (one - t)) * z.derivative().derivative() + coeff1 * z.derivative() +
         z.scaled(Rational(sign * p.m) * p.r);
}

Poly v_poly(const Rational& a, int m, int b, int n) {
  if (b < 0) throw InvalidArgument("V(a,m,b,n) needs b >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(b) + 1);
  for (int j = 0; j <= b; ++j) {
    Rational v = binomial(a + n + m, b - j) * binomial(a + j, j);
    c[static_cast<std::size_t>(j)] = (j % 2 == 1) ? v : Rational(-v);
  }
  return Poly(std::move(c));
}

OkamotoParams chart_okamoto(const SeedParams& p) {
  const Rational half(1, 2);
  return {(p.m + p.r + 1) * half, (p.m - p.r + 2 * p.s - 1) * half,
          (p.r + p.m - 1) * half, (p.m - p.r - 1) * half};
}

SeedParams chart_sigma_shift(const SeedParams& p) { return {p.r - 1, p.m + 1, p.s - 1}; }

SeedParams chart_sigma_unshift(const SeedParams& p) { return {p.r + 1, p.m - 1, p.s + 1}; }

PviParams pvi_params_at(int n, const SeedParams& p) {
  const Rational half(1, 2);
  Rational nr = p.r + n, ms = p.s + p.m, g = p.r - p.s + 1;
  Rational nm(n + p.m);
  return {nr * nr * half, -ms * ms * half, g * g * half, (1 - nm * nm) * half};
}

PviParams pvi_params_from_okamoto(const OkamotoParams& b, int n) {
  const Rational half(1, 2);
  Rational b3 = b.b3 + n;
  Rational a = b3 - b.b4, bb = b.b1 + b.b2, g = b.b1 - b.b2, d = b3 + b.b4;
  return {a * a * half, -bb * bb * half, g * g * half, -d * (d + 2) * half};
}

RatFunc seed_q(const SeedParams& p) {
  if (sgn(p.r) == 0) throw ParameterPole("seed q needs r != 0");
  Poly z = hypergeom_z(p);
  if (z.is_zero()) throw ParameterPole("hypergeometric polynomial vanishes");
  Poly t = Poly::t();
  RatFunc frac(t * (t - Poly(1L)) * z.derivative(), z.scaled(p.r));
  return RatFunc(t) + frac;
}

Poly lemma1_residual(const SeedParams& p) {
  Poly z = hypergeom_z(p);
  Poly t = Poly::t();
  Poly dz = z.derivative();
  Poly lhs = dz.scaled(p.s - p.r - 1) + (t * dz + z.scaled(p.r)).scaled(p.r + p.m + 1);
  Rational poch = pochhammer(p.s, p.m);
  if (sgn(poch) == 0) throw ParameterPole("Pochhammer (s)_m vanishes at s=" + rat(p.s));
  Rational k = Rational(factorial(p.m)) * p.r * (p.r + 1) / poch;
  if (p.m % 2 == 1) k = -k;
  return lhs - w_poly(p.r, p.m, p.s).scaled(k);
}

}  // namespace pvitau
