#include "pvitau/conjectures.hpp"

#include <chrono>

#include "pvitau/errors.hpp"
#include "pvitau/param_poly.hpp"
#include "pvitau/pvi.hpp"

namespace pvitau {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Json seed_json(const SeedParams& p) {
  return {{"r", to_string(p.r)}, {"m", p.m}, {"s", to_string(p.s)}};
}

// Integrality and content 1 at every step n >= 2; anomalies are failures.
void integrality_scan(const TauSequence& seq, const std::string& label, ConjectureReport& rep) {
  Json steps = Json::array();
  bool ok = true;
  for (int n = 2; n <= seq.size(); ++n) {
    Json step{{"n", n}, {"degree", seq.at(n).degree()}};
    auto c = seq.content_at(n);
    step["content"] = c ? Json(c->get_str()) : Json(nullptr);
    if (!c) {
      ok = false;
      rep.witnesses.push_back(label + " n=" + std::to_string(n) + ": non-integral");
    } else if (*c != 1) {
      ok = false;
      rep.witnesses.push_back(label + " n=" + std::to_string(n) + ": content " + c->get_str());
    }
    steps.push_back(std::move(step));
  }
  for (const auto& a : seq.anomalies) {
    ok = false;
    rep.witnesses.push_back(label + " n=" + std::to_string(a.n) + ": " + a.kind);
  }
  if (seq.size() < seq.requested_n) ok = false;
  Json fam{{"family", to_string(seq.family)},
           {"params", seed_json(seq.params)},
           {"strategy", seq.strategy.name()},
           {"seed_scale", to_string(seq.options.seed_scale)},
           {"generated", seq.size()},
           {"seed", poly_json(seq.at(2))},
           {"integral_primitive", ok},
           {"steps", std::move(steps)}};
  rep.details["runs"].push_back(std::move(fam));
  if (!ok) rep.verdict = Verdict::fail;
}

GenerateOptions scaled_seed(const Rational& scale) {
  GenerateOptions o;
  o.seed_scale = scale;
  o.expect_integral = true;
  return o;
}

}  // namespace

ConjectureReport conj4_check(long p, int N, SequenceCache& cache) {
  if (!is_prime(p) || p < 3) throw InvalidArgument("p must be a prime >= 3");
  if (N < 2) throw InvalidArgument("N must be >= 2");
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "c4";
  rep.subject = "p=" + std::to_string(p);
  rep.params = {{"p", p}, {"N", N}};
  rep.details["runs"] = Json::array();
  const SeedParams sp{Rational(p), static_cast<int>(p - 1), Rational(1)};
  auto seq = cache.get(Family::T, sp, N, NormalizationStrategy::with(CnSchedule::prime(p)),
                       scaled_seed(make_rational(1, p)));
  integrality_scan(*seq, "T", rep);
  rep.elapsed_ms = since(t0);
  return rep;
}

ConjectureReport examples_check(int which, int N, SequenceCache& cache) {
  if (N < 2) throw InvalidArgument("N must be >= 2");
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "example" + std::to_string(which);
  rep.subject = rep.conjecture;
  rep.params = {{"example", which}, {"N", N}};
  rep.details["runs"] = Json::array();
  switch (which) {
    case 2: {
      const SeedParams sp{Rational(3), 2, Rational(1)};
      auto T = cache.get(Family::T, sp, N, NormalizationStrategy::with(CnSchedule::prime(3)),
                         scaled_seed(make_rational(1, 3)));
      auto S = cache.get(Family::S, sp, N, NormalizationStrategy::with(CnSchedule::square_shift()),
                         scaled_seed(Rational(1)));
      integrality_scan(*T, "T", rep);
      integrality_scan(*S, "S", rep);
      break;
    }
    case 3: {
      const SeedParams sp{Rational(4), 3, Rational(1)};
      auto T = cache.get(Family::T, sp, N, NormalizationStrategy::with(CnSchedule::example3()),
                         scaled_seed(make_rational(1, 4)));
      integrality_scan(*T, "T", rep);
      break;
    }
    case 4: {
      const SeedParams sp{Rational(5), 4, Rational(1)};
      auto T = cache.get(Family::T, sp, N, NormalizationStrategy::with(CnSchedule::prime(5)),
                         scaled_seed(make_rational(1, 5)));
      integrality_scan(*T, "T", rep);
      break;
    }
    default:
      throw InvalidArgument("example must be 2, 3 or 4");
  }
  rep.elapsed_ms = since(t0);
  return rep;
}

ConjectureReport conj3_check(int m, int N) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (N < 2) throw InvalidArgument("N must be >= 2");
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "c3";
  rep.subject = "m=" + std::to_string(m);
  rep.params = {{"m", m}, {"N", N}};
  const Rational r0(3), s0(1);
  for (Family f : {Family::T, Family::S}) {
    const std::string label = to_string(f);
    GenericSequence g = generate_generic(f, m, N);
    Json steps = Json::array();
    for (std::size_t i = 1; i < g.polys.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      ZrstStatus z = pp_is_in_zrst(g.polys[i]);
      Json step{{"n", n}, {"in_zrst", z.in_zrst}, {"degree", g.polys[i].degree()}};
      if (!z.in_zrst) {
        rep.verdict = Verdict::fail;
        step["witness"] = z.witness;
        rep.witnesses.push_back(label + " n=" + std::to_string(n) + ": coefficient of t^" +
                                std::to_string(z.t_degree) + " is " + z.witness);
      }
      steps.push_back(std::move(step));
    }
    for (const auto& a : g.anomalies) {
      rep.verdict = Verdict::fail;
      rep.witnesses.push_back(label + " n=" + std::to_string(a.n) + ": " + a.kind);
    }

    // specialization commutes with the recurrence
    const Rational scale(factorial(f == Family::T ? m : m + 1));
    GenerateOptions o;
    o.seed_scale = scale;
    TauSequence conc = generate_sequence(f, {r0, m, s0}, static_cast<int>(g.polys.size()),
                                         NormalizationStrategy::with(CnSchedule::toda_k()), o);
    bool agree = conc.size() == static_cast<int>(g.polys.size());
    for (int n = 1; agree && n <= conc.size(); ++n)
      agree = pp_eval(g.polys[static_cast<std::size_t>(n - 1)], r0, s0) == conc.at(n);
    if (!agree) {
      rep.verdict = Verdict::fail;
      rep.witnesses.push_back(label + ": specialization at (3,1) disagrees with the concrete run");
    }
    rep.details[label] = {{"steps", std::move(steps)}, {"specialization_3_1_agrees", agree}};
  }
  rep.elapsed_ms = since(t0);
  return rep;
}

std::string to_string(C2Reading r) { return r == C2Reading::printed ? "printed" : "symmetric"; }

C2Reading parse_c2_reading(std::string_view s) {
  if (s == "printed") return C2Reading::printed;
  if (s == "symmetric") return C2Reading::symmetric;
  throw InvalidArgument("unknown discriminant reading '" + std::string(s) + "'");
}

long DiscriminantModel::h(long k, long j) { return k * j * j - (j * j * j + 2 * j) / 3; }

namespace {

// (a r + b s + c, exponent)
struct LinearFactor {
  long a, b, c;
  long e;
};

std::vector<LinearFactor> model_factors(const DiscriminantModel& d) {
  const long n = d.n, m = d.m;
  std::vector<LinearFactor> out;
  for (long j = 1; j <= m - 1; ++j) {
    const long e = DiscriminantModel::h(n - 1, j);
    out.push_back({1, 0, n + m - j, e});
    out.push_back({0, 1, j, e});
    out.push_back({-1, 1, m - 1 - j, e});
  }
  for (long j = 1; j <= m - 1; ++j) {
    const long e = DiscriminantModel::h(m, j);
    out.push_back({1, 0, 1 + j, e});
    out.push_back({0, 1, n + m - 1 - j, e});
    out.push_back({-1, 1, -n + j, e});
  }
  const long x = d.reading == C2Reading::printed ? m + m - 1 : n + m - 1;
  for (long j = m; j <= n - 1; ++j) {
    const long e = DiscriminantModel::h(j, m);
    out.push_back({1, 0, 1 + j, e});
    out.push_back({0, 1, x - j, e});
    out.push_back({-1, 1, -n + j, e});
  }
  return out;
}

}  // namespace

Rational DiscriminantModel::evaluate(const Rational& r, const Rational& s) const {
  Rational v(1);
  for (const auto& f : model_factors(*this)) {
    if (f.e == 0) continue;
    Rational x = r * f.a + s * f.b + f.c;
    if (sgn(x) == 0)
      throw SampleAtFactorZero("model factor vanishes at r=" + to_string(r) + ", s=" + to_string(s));
    v *= pow(x, static_cast<int>(f.e));
  }
  return v;
}

long DiscriminantModel::total_degree() const {
  long d = 0;
  for (const auto& f : model_factors(*this)) d += f.e;
  return d;
}

long DiscriminantModel::stated_degree() const {
  const long k = static_cast<long>(m) * (n - 1);
  return 3 * (k * (k - 1) / 2);
}

Poly conj2_tau(int n, int m, const Rational& r, const Rational& s) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  TauSequence seq =
      generate_sequence(Family::T, {r, m, s}, n, NormalizationStrategy::with(CnSchedule::toda_k()));
  return seq.at(n);
}

std::vector<Sample> default_conj2_samples(std::size_t count) {
  static const std::vector<Sample> pts = {
      {make_rational(7, 3), make_rational(2, 5)},   {make_rational(-4, 7), make_rational(11, 3)},
      {make_rational(13, 2), make_rational(-5, 9)}, {make_rational(3, 11), make_rational(17, 4)},
      {make_rational(-9, 5), make_rational(1, 7)},  {make_rational(5, 13), make_rational(-8, 3)},
      {make_rational(19, 6), make_rational(9, 7)},  {make_rational(-2, 9), make_rational(-13, 5)}};
  if (count > pts.size()) throw InvalidArgument("at most " + std::to_string(pts.size()) + " default samples");
  return {pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(count)};
}

long conj2_degree_estimate(int n, int m, long max_degree) {
  // r = 7/3 + 2l/5, s = 2/9 + 3l/7 never hits an integer shift of r, s or s - r
  const long points = max_degree + 3;
  std::vector<Rational> v;
  for (long l = 0; l < points; ++l) {
    Rational r = make_rational(7, 3) + make_rational(2 * l, 5);
    Rational s = make_rational(2, 9) + make_rational(3 * l, 7);
    v.push_back(discriminant(conj2_tau(n, m, r, s)));
  }
  long deg = -1;
  for (long order = 0; order < points; ++order) {
    bool all_zero = true;
    for (const auto& x : v)
      if (sgn(x) != 0) all_zero = false;
    if (all_zero) return deg;
    deg = order;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
    v.pop_back();
    if (v.empty()) break;
  }
  return -1;
}

ConjectureReport conj2_check(int n, int m, const std::vector<Sample>& samples, C2Reading reading,
                             bool estimate_degree) {
  if (n < 2 || m < 1) throw InvalidArgument("conj2 needs n >= 2, m >= 1");
  if (samples.size() < 2) throw InvalidArgument("conj2 needs at least two samples");
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "c2";
  rep.subject = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
  rep.params = {{"n", n}, {"m", m}, {"reading", to_string(reading)}, {"samples", samples.size()}};
  const DiscriminantModel selected{n, m, reading};
  const DiscriminantModel other{n, m, reading == C2Reading::printed ? C2Reading::symmetric : C2Reading::printed};

  // every sample must avoid the zeros of both readings before any work
  for (const auto& [r, s] : samples) {
    selected.evaluate(r, s);
    other.evaluate(r, s);
  }

  std::vector<Rational> discs;
  for (const auto& [r, s] : samples) discs.push_back(discriminant(conj2_tau(n, m, r, s)));

  auto ratios_for = [&](const DiscriminantModel& d, Json& out) {
    out = Json::array();
    std::optional<Rational> first;
    bool constant = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      Rational q = discs[i] / d.evaluate(samples[i].first, samples[i].second);
      out.push_back({{"r", to_string(samples[i].first)}, {"s", to_string(samples[i].second)},
                     {"ratio", to_string(q)}});
      if (!first)
        first = q;
      else if (q != *first)
        constant = false;
    }
    return std::make_pair(constant, *first);
  };

  Json sel_ratios, oth_ratios;
  auto [sel_const, sel_value] = ratios_for(selected, sel_ratios);
  auto [oth_const, oth_value] = ratios_for(other, oth_ratios);
  (void)oth_value;

  rep.details["stated_degree"] = selected.stated_degree();
  rep.details["model_degree"] = selected.total_degree();
  rep.details[to_string(selected.reading)] = {{"constant_ratio", sel_const}, {"ratios", sel_ratios}};
  rep.details[to_string(other.reading)] = {{"constant_ratio", oth_const}, {"ratios", oth_ratios}};
  if (sel_const && oth_const)
    rep.details["winning_reading"] = "both";
  else if (sel_const || oth_const)
    rep.details["winning_reading"] = to_string(sel_const ? selected.reading : other.reading);
  else
    rep.details["winning_reading"] = nullptr;

  if (!sel_const) {
    rep.verdict = Verdict::fail;
    rep.witnesses.push_back("ratio disc/model varies across samples under the " +
                            to_string(reading) + " reading");
  } else {
    rep.details["constant"] = to_string(sel_value);
    if (sgn(sel_value) == 0) {
      rep.verdict = Verdict::fail;
      rep.witnesses.push_back("discriminant vanishes at every sample");
    }
  }

  if (estimate_degree) {
    long est = conj2_degree_estimate(n, m, selected.stated_degree());
    rep.details["estimated_degree"] = est;
    if (est != selected.stated_degree()) {
      if (rep.verdict == Verdict::pass) rep.verdict = Verdict::flagged;
      rep.witnesses.push_back("estimated (r,s)-degree " + std::to_string(est) + " vs stated " +
                              std::to_string(selected.stated_degree()));
    }
  }
  if (selected.total_degree() != selected.stated_degree()) {
    if (rep.verdict == Verdict::pass) rep.verdict = Verdict::flagged;
    rep.witnesses.push_back("model degree " + std::to_string(selected.total_degree()) + " vs stated " +
                            std::to_string(selected.stated_degree()));
  }
  rep.elapsed_ms = since(t0);
  return rep;
}

ConjectureReport best_possible_scan(const TauSequence& seq) {
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "best";
  rep.subject = to_string(seq.family) + seq.params.to_string() + " " + seq.strategy.name();
  rep.params = seed_json(seq.params);
  rep.params["family"] = to_string(seq.family);
  rep.params["strategy"] = seq.strategy.name();
  rep.params["N"] = seq.size();
  Json trace = Json::array();
  bool trivial = true;
  for (int n = 1; n <= seq.size(); ++n)
    if (seq.at(n).degree() > 0) trivial = false;
  for (int n = 2; n <= seq.size(); ++n) {
    auto c = seq.content_at(n);
    trace.push_back(c ? Json(c->get_str()) : Json(nullptr));
    if (!c) {
      rep.verdict = Verdict::fail;
      rep.witnesses.push_back("n=" + std::to_string(n) + ": non-integral");
      continue;
    }
    if (*c == 1 || n == 2) continue;
    rep.verdict = Verdict::fail;
    // T_n = rhs / (c(n-1) T_{n-2}): c(n-1) * content would make step n primitive
    const int step = n - 1;
    Rational cn(1);
    if (seq.strategy.kind == NormalizationStrategy::Kind::schedule)
      cn = cn_value(seq.strategy.schedule, step, seq.family, seq.params.r);
    rep.witnesses.push_back("n=" + std::to_string(n) + ": content " + c->get_str() + ", refined c(" +
                            std::to_string(step) + ") = " + to_string(cn * Rational(*c)));
  }
  if (auto c2 = seq.content_at(2); c2 && *c2 != 1)
    rep.witnesses.push_back("seed content " + c2->get_str());
  rep.details["contents"] = std::move(trace);
  rep.details["trivial"] = trivial;
  rep.elapsed_ms = since(t0);
  return rep;
}

ConjectureReport conj1_check(const SeedParams& p, int N, SequenceCache& cache) {
  if (N < 1) throw InvalidArgument("N must be >= 1");
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "c1";
  rep.subject = params_label(p);
  rep.params = seed_json(p);
  rep.params["N"] = N;
  auto T = cache.get(Family::T, p, N + 1, NormalizationStrategy::auto_primitive());
  auto S = cache.get(Family::S, p, std::max(N, 2), NormalizationStrategy::auto_primitive());
  Json steps = Json::array();
  for (int n = 1; n <= N; ++n) {
    RatFunc prod = qn_product_conj1(n, p, cache);
    Poly res = pvi_cleared_residual(prod, pvi_params_at(n, p));
    bool equal = prod == qn_from_theorem(n, *T, *S);
    steps.push_back({{"n", n}, {"residual", res.is_zero() ? "zero" : "nonzero"}, {"equals_tau_route", equal}});
    if (!res.is_zero()) {
      rep.verdict = Verdict::fail;
      rep.witnesses.push_back("n=" + std::to_string(n) + ": residual " + primitive_integer_part(res).to_string());
    }
  }
  rep.details["steps"] = std::move(steps);
  rep.elapsed_ms = since(t0);
  return rep;
}

ConjectureReport prop2_check(int n, const Rational& r, int m) {
  auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "p2";
  rep.subject = "n=" + std::to_string(n) + ",r=" + to_string(r) + ",m=" + std::to_string(m);
  rep.params = {{"n", n}, {"r", to_string(r)}, {"m", m}};
  RatFunc q = prop2_qn(n, r, m);
  const bool printed = pvi_cleared_residual(q, prop2_params(n, r, m, make_rational(-1, 2))).is_zero();
  const bool implied = pvi_cleared_residual(q, prop2_params(n, r, m, make_rational(1, 2))).is_zero();
  rep.details["q"] = q.to_string();
  rep.details["gamma_printed_-1/2"] = printed ? "zero" : "nonzero";
  rep.details["gamma_implied_+1/2"] = implied ? "zero" : "nonzero";
  if (printed && implied)
    rep.details["gamma_resolution"] = "both";
  else if (printed || implied)
    rep.details["gamma_resolution"] = printed ? "-1/2" : "+1/2";
  else
    rep.details["gamma_resolution"] = nullptr;
  if (!printed && !implied) {
    rep.verdict = Verdict::fail;
    rep.witnesses.push_back("no gamma sign gives a zero residual");
  }
  rep.elapsed_ms = since(t0);
  return rep;
}

}  // namespace pvitau
