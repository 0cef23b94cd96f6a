#include "pvitau/toda.hpp"

#include <sstream>

#include "pvitau/errors.hpp"

namespace pvitau {

std::string to_string(Family f) { return f == Family::T ? "T" : "S"; }

Family parse_family(std::string_view s) {
  if (s == "T") return Family::T;
  if (s == "S") return Family::S;
  throw InvalidArgument("unknown family '" + std::string(s) + "' (expected T or S)");
}

std::string to_string(TodaForm f) {
  return f == TodaForm::introduction ? "introduction" : "okamoto";
}

TodaForm parse_toda_form(std::string_view s) {
  if (s == "introduction") return TodaForm::introduction;
  if (s == "okamoto") return TodaForm::okamoto;
  throw InvalidArgument("unknown Toda form '" + std::string(s) + "'");
}

CnSchedule CnSchedule::prime(long p) {
  if (p < 2) throw InvalidArgument("prime schedule needs p >= 2");
  return {Kind::prime, p, {}};
}

CnSchedule CnSchedule::explicit_table(std::map<int, Rational> values) {
  for (const auto& [n, v] : values)
    if (sgn(v) == 0) throw InvalidArgument("schedule value c(" + std::to_string(n) + ") is zero");
  return {Kind::table, 0, std::move(values)};
}

CnSchedule CnSchedule::parse(std::string_view text) {
  if (text == "unit") return unit();
  if (text == "example3") return example3();
  if (text == "square-shift") return square_shift();
  if (text == "toda-k") return toda_k();
  if (text.rfind("prime:", 0) == 0) {
    std::string num(text.substr(6));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("malformed prime schedule '" + std::string(text) + "'");
    return prime(std::stol(num));
  }
  if (text.rfind("table:", 0) == 0) {
    std::map<int, Rational> values;
    std::stringstream ss{std::string(text.substr(6))};
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw InvalidArgument("malformed table entry '" + item + "'");
      values[std::stoi(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
    }
    return explicit_table(std::move(values));
  }
  throw InvalidArgument("unknown schedule '" + std::string(text) + "'");
}

std::string CnSchedule::name() const {
  switch (kind) {
    case Kind::unit: return "unit";
    case Kind::prime: return "prime:" + std::to_string(p);
    case Kind::example3: return "example3";
    case Kind::square_shift: return "square-shift";
    case Kind::toda_k: return "toda-k";
    case Kind::table: {
      std::string s = "table:";
      bool first = true;
      for (const auto& [n, v] : table) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(n) + "=" + pvitau::to_string(v);
      }
      return s;
    }
  }
  return "unit";
}

NormalizationStrategy NormalizationStrategy::parse(std::string_view text) {
  if (text == "raw") return raw();
  if (text == "auto-primitive") return auto_primitive();
  return with(CnSchedule::parse(text));
}

std::string NormalizationStrategy::name() const {
  switch (kind) {
    case Kind::raw: return "raw";
    case Kind::auto_primitive: return "auto-primitive";
    case Kind::schedule: return schedule.name();
  }
  return "raw";
}

Rational k_coefficient(Family f, int n, const Rational& r) {
  if (n < 2) throw InvalidArgument("k(n) needs n >= 2");
  Rational shift = f == Family::T ? Rational(0) : Rational(-1);
  return Rational(n - 1) * (n + r + shift);
}

Rational k_coefficient_okamoto(Family f, int n, const SeedParams& p) {
  if (n < 2) throw InvalidArgument("k(n) needs n >= 2");
  OkamotoParams b = chart_okamoto(f == Family::T ? p : chart_sigma_shift(p));
  return (b.b1 + b.b3 + n) * (b.b3 + b.b4 + n) - (b.b1 + b.b4) * (2 * b.b1 + 2 * n - 2);
}

ParamScalar k_coefficient_generic(Family f, int n) {
  if (n < 2) throw InvalidArgument("k(n) needs n >= 2");
  long shift = f == Family::T ? 0 : -1;
  return ParamScalar(static_cast<long>(n - 1)) *
         (ParamScalar::r() + ParamScalar(static_cast<long>(n) + shift));
}

Rational cn_value(const CnSchedule& sched, int n, Family f, const Rational& r) {
  if (n < 2) throw InvalidArgument("c(n) needs n >= 2");
  using K = CnSchedule::Kind;
  switch (sched.kind) {
    case K::unit: return Rational(1);
    case K::prime: {
      const long p = sched.p;
      Rational base = Rational((p + n) * (p + n - 2));
      const long res = n % p;
      if (res == 1) return base * (p * p);
      if (res == 0 || res == 2) return base / p;
      return base;
    }
    case K::example3: {
      Rational base = Rational((n + 2) * (n + 4));
      if (n % 2 == 0) return base / 8;
      if (n % 4 == 3) return base * 4;
      return base * 16;
    }
    case K::square_shift: {
      Rational v = n + r - 1;
      return v * v;
    }
    case K::toda_k: return k_coefficient(f, n, r);
    case K::table: {
      auto it = sched.table.find(n);
      if (it == sched.table.end())
        throw InvalidArgument("schedule table has no entry for n=" + std::to_string(n));
      return it->second;
    }
  }
  return Rational(1);
}

namespace {

// (t^2 - t) * x
Poly times_u(const Poly& x) { return x.shifted(2) - x.shifted(1); }

ParamPoly times_u(const ParamPoly& x) {
  static const ParamPoly u(Poly::from_ints({0, -1, 1}));
  return u * x;
}

Poly times_w(const Poly& x) { return x.shifted(1).scaled(Rational(2)) - x; }

ParamPoly times_w(const ParamPoly& x) {
  static const ParamPoly w(Poly::from_ints({-1, 2}));
  return w * x;
}

template <class P, class S>
P rhs_impl(const P& T, const S& k) {
  P d1 = T.derivative();
  P d2 = d1.derivative();
  P bracket = times_u(d2) + times_w(d1) + T.scaled(k);
  return T * bracket - times_u(d1 * d1);
}

}  // namespace

Poly toda_rhs(const Poly& T, const Rational& k) { return rhs_impl(T, k); }

ParamPoly toda_rhs(const ParamPoly& T, const ParamScalar& k) { return rhs_impl(T, k); }

Poly toda_step(const Poly& prev, const Poly& cur, const Rational& k, const Rational& c) {
  if (prev.is_zero()) throw InvalidArgument("Toda step with zero T_{n-1}");
  if (sgn(c) == 0) throw InvalidArgument("Toda step with c = 0");
  return exact_div(toda_rhs(cur, k), prev.scaled(c));
}

ParamPoly toda_step(const ParamPoly& prev, const ParamPoly& cur, const ParamScalar& k,
                    const ParamScalar& c) {
  if (prev.is_zero()) throw InvalidArgument("Toda step with zero T_{n-1}");
  if (c.is_zero()) throw InvalidArgument("Toda step with c = 0");
  return exact_div(toda_rhs(cur, k), prev.scaled(c));
}

Poly bilinear_residual(const Poly& prev, const Poly& cur, const Poly& next, const Rational& k,
                       const Rational& c) {
  return (next * prev).scaled(c) - toda_rhs(cur, k);
}

const Poly& TauSequence::at(int n) const {
  if (n < 1 || n > size())
    throw SequenceTooShort("sequence has " + std::to_string(size()) + " terms, index " +
                           std::to_string(n) + " requested");
  return polys[static_cast<std::size_t>(n - 1)];
}

std::optional<Integer> TauSequence::content_at(int n) const {
  at(n);
  return contents[static_cast<std::size_t>(n - 1)];
}

int TauSequence::expected_degree(int n) const {
  return (family == Family::T ? params.m : params.m + 1) * (n - 1);
}

TauSequence TauSequence::truncated(int n) const {
  TauSequence out = *this;
  out.requested_n = n;
  if (out.size() > n) {
    out.polys.resize(static_cast<std::size_t>(n));
    out.contents.resize(static_cast<std::size_t>(n));
  }
  std::erase_if(out.anomalies, [n](const Anomaly& a) { return a.n > n; });
  return out;
}

Poly family_seed(Family f, const SeedParams& p) {
  if (f == Family::T) return w_poly(p.r, p.m, p.s);
  SeedParams q = chart_sigma_shift(p);
  return w_poly(q.r, q.m, q.s);
}

namespace {

void record(TauSequence& seq, Poly poly) {
  const int n = seq.size() + 1;
  std::optional<Integer> c;
  if (seq.strategy.kind == NormalizationStrategy::Kind::auto_primitive && n >= 2) {
    if (poly.is_integral() && !poly.is_zero()) {
      auto cp = content_primitive(poly);
      c = cp.content;
      poly = std::move(cp.primitive);
    }
  } else if (n >= 2 && poly.is_integral()) {
    c = content(poly);
  }
  if (n >= 2 && !poly.is_integral() &&
      (seq.options.expect_integral ||
       seq.strategy.kind == NormalizationStrategy::Kind::auto_primitive))
    seq.anomalies.push_back({n, "non-integral", poly.to_string()});
  if (poly.degree() != seq.expected_degree(n))
    seq.anomalies.push_back({n, "degree-violation",
                             "degree " + std::to_string(poly.degree()) + ", expected " +
                                 std::to_string(seq.expected_degree(n))});
  seq.polys.push_back(std::move(poly));
  seq.contents.push_back(std::move(c));
}

}  // namespace

TauSequence generate_sequence(Family f, const SeedParams& p, int N,
                              const NormalizationStrategy& strategy,
                              const GenerateOptions& options) {
  if (N < 2) throw InvalidArgument("sequence length N must be >= 2");
  if (p.m < 0) throw InvalidArgument("m must be >= 0");
  if (sgn(options.seed_scale) == 0) throw InvalidArgument("seed scale must be nonzero");
  TauSequence seq;
  seq.family = f;
  seq.params = p;
  seq.strategy = strategy;
  seq.options = options;
  seq.requested_n = N;
  record(seq, Poly(1L));
  record(seq, family_seed(f, p).scaled(options.seed_scale));
  for (int n = 2; n < N; ++n) {
    Rational k = options.form == TodaForm::introduction ? k_coefficient(f, n, p.r)
                                                        : k_coefficient_okamoto(f, n, p);
    Rational c(1);
    if (strategy.kind == NormalizationStrategy::Kind::schedule)
      c = cn_value(strategy.schedule, n, f, p.r);
    if (sgn(c) == 0) throw InvalidArgument("c(" + std::to_string(n) + ") = 0");
    try {
      record(seq, toda_step(seq.at(n - 1), seq.at(n), k, c));
    } catch (const NonExactDivision& e) {
      seq.anomalies.push_back({n + 1, "non-exact-division", "remainder " + e.remainder()});
      break;
    }
  }
  return seq;
}

std::vector<std::pair<int, Integer>> content_trace(const TauSequence& seq) {
  std::vector<std::pair<int, Integer>> out;
  for (int n = 2; n <= seq.size(); ++n)
    if (auto c = seq.content_at(n)) out.emplace_back(n, *c);
  return out;
}

GenericSequence generate_generic(Family f, int m, int N, bool factorial_seed) {
  if (N < 2) throw InvalidArgument("sequence length N must be >= 2");
  GenericSequence g;
  g.family = f;
  g.m = m;
  g.polys.emplace_back(1L);
  ParamPoly seed;
  if (f == Family::T) {
    seed = w_poly_generic(m);
    if (factorial_seed) seed = seed.scaled(ParamScalar(Rational(factorial(m))));
  } else {
    // W(r-1, m+1, s-1) from the generic W by substituting r -> r-1, s -> s-1.
    ParamPoly w = w_poly_generic(m + 1);
    std::vector<ParamScalar> c;
    for (const auto& coef : w.coeffs()) {
      MPoly2 shifted;
      for (const auto& [mono, v] : coef.num().terms()) {
        MPoly2 term(v);
        for (int i = 0; i < mono.first; ++i) term = term * (MPoly2::r() - MPoly2(1L));
        for (int i = 0; i < mono.second; ++i) term = term * (MPoly2::s() - MPoly2(1L));
        shifted += term;
      }
      c.emplace_back(shifted);
    }
    seed = ParamPoly(std::move(c));
    if (factorial_seed) seed = seed.scaled(ParamScalar(Rational(factorial(m + 1))));
  }
  g.polys.push_back(seed);
  for (int n = 2; n < N; ++n) {
    ParamScalar k = k_coefficient_generic(f, n);
    try {
      g.polys.push_back(toda_step(g.polys[n - 2], g.polys[n - 1], k, k));
    } catch (const NonExactDivision& e) {
      g.anomalies.push_back({n + 1, "non-exact-division", "remainder " + e.remainder()});
      break;
    }
    const int expected = (f == Family::T ? m : m + 1) * n;
    if (g.polys.back().degree() != expected)
      g.anomalies.push_back({n + 1, "degree-violation",
                             "degree " + std::to_string(g.polys.back().degree())});
  }
  return g;
}

}  // namespace pvitau
