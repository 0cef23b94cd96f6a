#include "pvitau/pvi.hpp"

#include <chrono>
#include <sstream>

#include "pvitau/errors.hpp"
#include "pvitau/pvi_equation.hpp"

namespace pvitau {

RatFunc pvi_residual(const RatFunc& q, const PviParams& pv) {
  const RatFunc t = RatFunc::t();
  if (q.is_constant()) throw DegenerateQ("q is constant: " + q.to_string());
  if (q == t) throw DegenerateQ("q is identically t");
  RatFunc d1 = q.derivative();
  return pvi_expression(q, d1, d1.derivative(), t, pv);
}

Poly pvi_cleared_residual(const Poly& num, const Poly& den, const PviParams& pv) {
  if (den.is_zero()) throw DivisionByZeroFunction("q has a zero denominator");
  const Poly t = Poly::t(), one(1L);
  const Poly u = t * t - t;
  const Poly& A = num;
  const Poly B = num - den, C = num - t * den;
  const Poly W = num.derivative() * den - num * den.derivative();
  const Poly AB = A * B, BC = B * C, AC = A * C;
  const Poly ABC = AB * C;
  const Poly u2 = u * u;
  const Poly D2 = den * den;

  Poly r = (u2 * ABC * (W.derivative() * den - (W * den.derivative()).scaled(Rational(2)))).scaled(Rational(2));
  r -= u2 * (AB + BC + AC) * (W * W);
  r += (u * AB * ((t.scaled(Rational(2)) - one) * C + u * den) * W * den).scaled(Rational(2));
  Poly params = (ABC * ABC).scaled(pv.alpha) + (t * D2 * BC * BC).scaled(pv.beta) +
                ((t - one) * D2 * AC * AC).scaled(pv.gamma) + (u * D2 * AB * AB).scaled(pv.delta);
  r -= params.scaled(Rational(2));
  return r;
}

Poly pvi_cleared_residual(const RatFunc& q, const PviParams& pv) {
  return pvi_cleared_residual(q.num(), q.den(), pv);
}

bool PviPerturbation::any() const {
  return sgn(alpha) != 0 || sgn(beta) != 0 || sgn(gamma) != 0 || sgn(delta) != 0;
}

PviParams PviPerturbation::apply(PviParams pv) const {
  pv.alpha += alpha;
  pv.beta += beta;
  pv.gamma += gamma;
  pv.delta += delta;
  return pv;
}

PviPerturbation PviPerturbation::parse(std::string_view text) {
  PviPerturbation out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("perturbation '" + item + "' lacks '='");
    std::string name = item.substr(0, eq), val = item.substr(eq + 1);
    if (!val.empty() && val[0] == '+') val.erase(0, 1);
    Rational v = parse_rational(val);
    if (name == "alpha")
      out.alpha += v;
    else if (name == "beta")
      out.beta += v;
    else if (name == "gamma")
      out.gamma += v;
    else if (name == "delta")
      out.delta += v;
    else
      throw InvalidArgument("unknown P_VI parameter '" + name + "'");
  }
  return out;
}

std::string PviPerturbation::to_string() const {
  std::string s;
  auto add = [&s](const char* name, const Rational& v) {
    if (sgn(v) == 0) return;
    if (!s.empty()) s += ",";
    s += std::string(name) + "=" + (sgn(v) > 0 ? "+" : "") + pvitau::to_string(v);
  };
  add("alpha", alpha);
  add("beta", beta);
  add("gamma", gamma);
  add("delta", delta);
  return s;
}

namespace {

void require_pair(const TauSequence& T, const TauSequence& S) {
  if (T.family != Family::T || S.family != Family::S)
    throw InvalidArgument("expected a T sequence and an S sequence");
  if (T.params.r != S.params.r || T.params.m != S.params.m || T.params.s != S.params.s)
    throw InvalidArgument("T and S sequences come from different parameters");
}

// Scale num and den by a common rational so both are integral.
void clear_denominators(Poly& num, Poly& den) {
  Integer l = denominator_lcm(num);
  Integer ld = denominator_lcm(den);
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  if (l != 1) {
    num = num.scaled(Rational(l));
    den = den.scaled(Rational(l));
  }
}

}  // namespace

QnParts qn_theorem_parts(int n, const TauSequence& T, const TauSequence& S) {
  if (n < 1) throw InvalidArgument("q_n needs n >= 1");
  require_pair(T, S);
  const Poly Tn1 = primitive_integer_part(T.at(n + 1));
  const Poly Sn = primitive_integer_part(S.at(n));
  const SeedParams& p = T.params;
  const Rational nr = p.r + n;
  if (sgn(nr) == 0) throw ParameterPole("q_n needs n + r != 0");
  const Poly t = Poly::t(), one(1L);
  const Poly ST = Sn * Tn1;
  Poly num = (t * ST).scaled(nr) + (t * t - t) * (Sn.derivative() * Tn1 - Tn1.derivative() * Sn) -
             ((t - one) * ST).scaled(p.s + n - 1) - (t * ST).scaled(nr - p.m - p.s);
  Poly den = ST.scaled(nr);
  clear_denominators(num, den);
  return {std::move(num), std::move(den)};
}

RatFunc qn_from_theorem(int n, const TauSequence& T, const TauSequence& S) {
  QnParts parts = qn_theorem_parts(n, T, S);
  return RatFunc(parts.num, parts.den);
}

RatFunc qn_product_conj1(int n, const SeedParams& p, SequenceCache& cache) {
  if (n < 1) throw InvalidArgument("q_n needs n >= 1");
  const auto strat = NormalizationStrategy::with(CnSchedule::toda_k());
  auto tau = [&](const SeedParams& q, int idx) {
    auto seq = cache.get(Family::T, q, std::max(idx, 2), strat);
    return seq->at(idx);
  };
  const SeedParams a{p.r, p.m + 1, p.s}, b{p.r - 1, p.m, p.s - 1}, d{p.r - 1, p.m + 1, p.s - 1};
  const Rational nr = p.r + n;
  if (sgn(nr) == 0) throw ParameterPole("q_n needs n + r != 0");
  Poly num = (tau(a, n) * tau(b, n + 1)).scaled((p.m + p.s) / nr);
  Poly den = tau(p, n + 1) * tau(d, n);
  if (den.is_zero()) throw DivisionByZeroFunction("product denominator vanishes");
  return RatFunc(num, den);
}

RatFunc prop2_qn(int n, const Rational& r, int m) {
  Poly num = v_poly(r + 1, m, m + 1, n) * v_poly(r, m, m, n);
  Poly den = v_poly(r + 1, m, m, n) * v_poly(r, m, m + 1, n);
  if (den.is_zero()) throw DivisionByZeroFunction("V-product denominator vanishes");
  return RatFunc(num, den);
}

PviParams prop2_params(int n, const Rational& r, int m, const Rational& gamma) {
  const Rational half(1, 2);
  Rational nr = r + n, mr = r + m + 2;
  Rational nm(n + m);
  return {nr * nr * half, -mr * mr * half, gamma, (1 - nm * nm) * half};
}

FactorCheck example1_factor_check(Family f, int n, const Rational& r, int m) {
  if (n < 2) throw InvalidArgument("factor check needs n >= 2");
  const SeedParams p{r, m, r + 2};
  auto seq = generate_sequence(f, p, n, NormalizationStrategy::raw());
  FactorCheck c;
  c.family = f;
  c.n = n;
  const int deg = f == Family::T ? m : m + 1;
  c.exponent = deg * (n - 2);
  c.expected_degree = deg;
  if (seq.size() < n) return c;
  Poly x = seq.at(n);
  const Poly lin = Poly::from_ints({-1, 1});
  c.divisible = true;
  for (int i = 0; i < c.exponent; ++i) {
    DivRem qr = divrem(x, lin);
    if (!qr.remainder.is_zero()) {
      c.divisible = false;
      break;
    }
    x = std::move(qr.quotient);
  }
  if (c.divisible) c.quotient_degree = x.degree();
  return c;
}

Poly polynomiality_condition(const Poly& f, const Poly& g) {
  Poly f1 = f.derivative(), g1 = g.derivative();
  return f * f1.derivative() - f1 * f1 + (f1 * g).scaled(Rational(3)) -
         (f * g1).scaled(Rational(2)) - (g * g).scaled(Rational(2)) + f.scaled(Rational(2));
}

std::string params_label(const SeedParams& p) { return p.to_string(); }

VerificationReport verify_theorem_qn(int n, const TauSequence& T, const TauSequence& S,
                                     const PviPerturbation& perturb) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = "theorem-qn";
  rep.subject = "q_" + std::to_string(n) + params_label(T.params);
  rep.params = {{"r", to_string(T.params.r)}, {"m", T.params.m}, {"s", to_string(T.params.s)}, {"n", n}};
  PviParams pv = perturb.apply(pvi_params_at(n, T.params));
  rep.details["pvi_params"] = pv.to_string();
  if (perturb.any()) rep.details["perturbation"] = perturb.to_string();
  QnParts parts = qn_theorem_parts(n, T, S);
  Poly res = pvi_cleared_residual(parts.num, parts.den, pv);
  const bool constant =
      (parts.num.derivative() * parts.den - parts.num * parts.den.derivative()).is_zero();
  if (!res.is_zero()) {
    rep.status = ResidualStatus::nonzero;
    rep.witness = primitive_integer_part(res);
  } else if (constant) {
    rep.status = ResidualStatus::flagged;
    rep.note = "degenerate: q_n is the constant " + RatFunc(parts.num, parts.den).to_string();
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace pvitau
