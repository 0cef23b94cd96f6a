#include "pvitau/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "pvitau/errors.hpp"
#include "pvitau/hankel.hpp"

namespace pvitau {

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void apply_reading(Readings& r, std::string_view assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw InvalidArgument("reading '" + std::string(assignment) + "' must look like key=value");
  std::string_view key = assignment.substr(0, eq), val = assignment.substr(eq + 1);
  if (key == "uv")
    r.uv = parse_uv_reading(val);
  else if (key == "bplus")
    r.bplus = parse_b_reading(val);
  else if (key == "collapse")
    r.collapse = parse_collapse_reading(val);
  else if (key == "hode")
    r.hode = parse_hode_reading(val);
  else
    throw InvalidArgument("unknown reading key '" + std::string(key) + "'");
}

std::vector<SeedParams> default_grid() {
  return {{Rational(3), 2, Rational(1)},
          {Rational(4), 3, Rational(1)},
          {Rational(5), 4, Rational(1)},
          {Rational(2), 1, Rational(3)},
          {Rational(1), 1, Rational(1)}};
}

std::vector<SeedParams> parse_grid(std::string_view text) {
  std::vector<SeedParams> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::stringstream is(item);
    std::string r, m, s;
    if (!std::getline(is, r, ',') || !std::getline(is, m, ',') || !std::getline(is, s, ','))
      throw InvalidArgument("grid entry '" + item + "' must be r,m,s");
    int mi = 0;
    try {
      std::size_t used = 0;
      mi = std::stoi(m, &used);
      if (used != m.size()) throw std::invalid_argument(m);
    } catch (const std::exception&) {
      throw InvalidArgument("m in '" + item + "' is not an integer");
    }
    if (mi < 1) throw InvalidArgument("m must be >= 1 in '" + item + "'");
    out.push_back({parse_rational(r), mi, parse_rational(s)});
  }
  if (out.empty()) throw InvalidArgument("empty grid");
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"riccati", "seed-pvi", "collapse",      "theorem-qn",
                                                 "lemma1",  "prop1",    "prop2",         "hankel",
                                                 "polynomiality", "h-sigma", "example1",
                                                 "backlund-shift"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;
using Task = std::function<VerificationReport()>;

Json seed_json(const SeedParams& p) {
  return {{"r", to_string(p.r)}, {"m", p.m}, {"s", to_string(p.s)}};
}

VerificationReport base(const std::string& suite, const std::string& subject, Json params) {
  VerificationReport r;
  r.suite = suite;
  r.subject = subject;
  r.params = std::move(params);
  return r;
}

void set_residual(VerificationReport& rep, const Poly& numerator) {
  if (numerator.is_zero()) {
    rep.status = ResidualStatus::zero;
    rep.witness.reset();
  } else {
    rep.status = ResidualStatus::nonzero;
    rep.witness = primitive_integer_part(numerator);
  }
}

void set_residual(VerificationReport& rep, const RatFunc& residual) { set_residual(rep, residual.num()); }

// Timing and error capture around a task; errors become report content.
Task guarded(VerificationReport shell, std::function<void(VerificationReport&)> body) {
  return [shell = std::move(shell), body = std::move(body)]() {
    VerificationReport rep = shell;
    auto t0 = Clock::now();
    try {
      body(rep);
    } catch (const DegenerateQ& e) {
      rep.status = ResidualStatus::flagged;
      rep.witness.reset();
      rep.note = std::string("degenerate: ") + e.what();
    } catch (const DegenerateTransformation& e) {
      rep.status = ResidualStatus::flagged;
      rep.witness.reset();
      rep.note = std::string("degenerate: ") + e.what();
    } catch (const std::exception& e) {
      rep.status = ResidualStatus::nonzero;
      rep.witness.reset();
      rep.note = std::string("error: ") + e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return rep;
  };
}

void note_perturbation(VerificationReport& rep, const PviPerturbation& p, bool applies) {
  if (!p.any()) return;
  rep.details["perturbation"] = applies ? p.to_string() : "not applicable";
}

std::vector<Task> riccati_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    out.push_back(guarded(base("riccati", "seed" + p.to_string(), seed_json(p)), [p, &opt](auto& rep) {
      note_perturbation(rep, opt.perturb, false);
      set_residual(rep, riccati_residual(seed_q(p), chart_okamoto(p)));
    }));
  return out;
}

std::vector<Task> seed_pvi_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    out.push_back(guarded(base("seed-pvi", "seed" + p.to_string(), seed_json(p)), [p, &opt](auto& rep) {
      PviParams pv = opt.perturb.apply(pvi_params_at(0, p));
      note_perturbation(rep, opt.perturb, true);
      rep.details["pvi_params"] = pv.to_string();
      RatFunc q = seed_q(p);
      set_residual(rep, pvi_cleared_residual(q, pv));
      if (rep.status == ResidualStatus::zero && q.is_constant()) {
        rep.status = ResidualStatus::flagged;
        rep.note = "degenerate: seed q is the constant " + q.to_string();
      }
    }));
  return out;
}

std::vector<Task> collapse_tasks(const SuiteOptions& opt, SequenceCache& cache) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    out.push_back(guarded(base("collapse", "q1" + p.to_string(), seed_json(p)), [p, &opt, &cache](auto& rep) {
      note_perturbation(rep, opt.perturb, false);
      const OkamotoParams b = chart_okamoto(p);
      const RatFunc q = seed_q(p);
      const RatFunc pp = p_from_seed(q, b);
      const RatFunc q1 = q1_collapsed(q, b);
      const RatFunc via_uv = backlund_qplus(pp, q, b, opt.readings.uv);
      const RatFunc via_frac = qplus_collapsed(pp, q, b, opt.readings.collapse);
      auto T = cache.get(Family::T, p, 2, NormalizationStrategy::auto_primitive());
      auto S = cache.get(Family::S, p, 2, NormalizationStrategy::auto_primitive());
      const RatFunc via_tau = qn_from_theorem(1, *T, *S);
      rep.details["readings"] = {{"uv", to_string(opt.readings.uv)},
                                 {"collapse", to_string(opt.readings.collapse)}};
      rep.details["q1"] = q1.to_string();
      rep.details["uv_equals_q1"] = via_uv == q1;
      rep.details["collapsed_fraction_equals_q1"] = via_frac == q1;
      rep.details["tau_route_equals_q1"] = via_tau == q1;
      try {
        rep.details["q1_at_2"] = to_string(q1.evaluate(Rational(2)));
      } catch (const PoleEvaluation&) {
        rep.details["q1_at_2"] = "pole";
      }
      Poly witness;
      for (const RatFunc* other : {&via_uv, &via_frac, &via_tau})
        if (witness.is_zero()) witness = (*other - q1).num();
      set_residual(rep, witness);
    }));
  return out;
}

std::vector<Task> theorem_tasks(const SuiteOptions& opt, SequenceCache& cache) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    for (int n = 1; n <= opt.N; ++n) {
      Json params = seed_json(p);
      params["n"] = n;
      out.push_back(guarded(base("theorem-qn", "q_" + std::to_string(n) + p.to_string(), params),
                            [p, n, &opt, &cache](auto& rep) {
                              auto T = cache.get(Family::T, p, opt.N + 1, NormalizationStrategy::auto_primitive());
                              auto S = cache.get(Family::S, p, std::max(opt.N, 2),
                                                 NormalizationStrategy::auto_primitive());
                              VerificationReport r = verify_theorem_qn(n, *T, *S, opt.perturb);
                              rep.status = r.status;
                              rep.witness = r.witness;
                              rep.note = r.note;
                              rep.details = r.details;
                            }));
    }
  return out;
}

std::vector<Task> lemma1_tasks(const SuiteOptions& opt) {
  static const Rational grid[] = {make_rational(-7, 2), make_rational(1, 3), Rational(2), make_rational(9, 5),
                                  Rational(6)};
  std::vector<Task> out;
  for (int m = 1; m <= 8; ++m)
    out.push_back(guarded(base("lemma1", "m=" + std::to_string(m), {{"m", m}, {"points", 25}}), [m, &opt](auto& rep) {
      note_perturbation(rep, opt.perturb, false);
      for (const auto& r : grid)
        for (const auto& s : grid) {
          Poly res = lemma1_residual({r, m, s});
          if (!res.is_zero() && rep.status == ResidualStatus::zero) {
            set_residual(rep, res);
            rep.note = "first failure at r=" + to_string(r) + ", s=" + to_string(s);
          }
        }
    }));
  return out;
}

std::vector<Task> prop1_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    out.push_back(guarded(base("prop1", "T2'/T2" + p.to_string(), seed_json(p)), [p, &opt](auto& rep) {
      note_perturbation(rep, opt.perturb, false);
      set_residual(rep, prop1_residual(p));
    }));
  return out;
}

std::vector<Task> prop2_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (long r = 1; r <= 2; ++r)
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= opt.N; ++n) {
        Json params{{"r", std::to_string(r)}, {"m", m}, {"s", std::to_string(r + 2)}, {"n", n}};
        std::string subject = "q_" + std::to_string(n) + "(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ")";
        out.push_back(guarded(base("prop2", subject, params), [r, m, n, &opt](auto& rep) {
          note_perturbation(rep, opt.perturb, true);
          RatFunc q = prop2_qn(n, Rational(r), m);
          Poly printed = pvi_cleared_residual(q, opt.perturb.apply(prop2_params(n, Rational(r), m, make_rational(-1, 2))));
          Poly implied = pvi_cleared_residual(q, opt.perturb.apply(prop2_params(n, Rational(r), m, make_rational(1, 2))));
          rep.details["gamma_printed_-1/2"] = printed.is_zero() ? "zero" : "nonzero";
          rep.details["gamma_implied_+1/2"] = implied.is_zero() ? "zero" : "nonzero";
          if (printed.is_zero())
            rep.details["gamma_resolution"] = implied.is_zero() ? "both" : "-1/2";
          else if (implied.is_zero())
            rep.details["gamma_resolution"] = "+1/2";
          else
            rep.details["gamma_resolution"] = nullptr;
          set_residual(rep, printed.is_zero() ? printed : implied);
        }));
      }
  return out;
}

std::vector<Task> hankel_tasks(const SuiteOptions& opt, SequenceCache& cache) {
  std::vector<Task> out;
  const int top = std::min(opt.N, 4);
  for (const auto& p : opt.grid)
    for (int n = 1; n <= top; ++n) {
      Json params = seed_json(p);
      params["n"] = n;
      out.push_back(guarded(base("hankel", "det_" + std::to_string(n) + p.to_string(), params),
                            [p, n, &opt, &cache](auto& rep) {
                              note_perturbation(rep, opt.perturb, false);
                              auto T = cache.get(Family::T, p, std::max(n + 1, 2), NormalizationStrategy::raw());
                              HankelResult h = hankel_check(n, p, *T);
                              rep.details["determinant_exponent"] = to_string(h.determinant.e);
                              rep.details["expected_exponent"] = to_string(h.expected.e);
                              if (h.proportional && sgn(h.constant) != 0) {
                                rep.details["constant"] = to_string(h.constant);
                                set_residual(rep, Poly());
                              } else {
                                rep.note = "determinant is not a constant multiple of the expected tau";
                                set_residual(rep, h.determinant.poly.is_zero() ? h.expected.poly : h.determinant.poly);
                              }
                            }));
    }
  return out;
}

std::vector<Task> polynomiality_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  out.push_back(guarded(base("polynomiality", "f=t^2-t,g=2t-1", {{"f", "t^2 - t"}, {"g", "2*t - 1"}}),
                        [&opt](auto& rep) {
                          note_perturbation(rep, opt.perturb, false);
                          set_residual(rep, polynomiality_condition(Poly::from_ints({0, -1, 1}),
                                                                    Poly::from_ints({-1, 2})));
                        }));
  return out;
}

std::vector<Task> h_sigma_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    out.push_back(guarded(base("h-sigma", "h" + p.to_string(), seed_json(p)), [p, &opt](auto& rep) {
      note_perturbation(rep, opt.perturb, false);
      rep.details["reading"] = to_string(opt.readings.hode);
      const OkamotoParams b = chart_okamoto(p);
      const RatFunc q = seed_q(p);
      const RatFunc h = hamiltonian_data(p_from_seed(q, b), q, b).h;
      set_residual(rep, h_sigma_residual(h, b, opt.readings.hode));
    }));
  return out;
}

std::vector<Task> example1_tasks(const SuiteOptions& opt) {
  std::vector<Task> out;
  for (Family f : {Family::T, Family::S})
    for (long r = 1; r <= 2; ++r)
      for (int m = 1; m <= 2; ++m)
        for (int n = 2; n <= opt.N; ++n) {
          Json params{{"family", to_string(f)}, {"r", std::to_string(r)}, {"m", m}, {"s", std::to_string(r + 2)}, {"n", n}};
          std::string subject = to_string(f) + "_" + std::to_string(n) + "(r=" + std::to_string(r) +
                                ",m=" + std::to_string(m) + ")";
          out.push_back(guarded(base("example1", subject, params), [f, r, m, n, &opt](auto& rep) {
            note_perturbation(rep, opt.perturb, false);
            FactorCheck c = example1_factor_check(f, n, Rational(r), m);
            rep.details["exponent"] = c.exponent;
            rep.details["divisible"] = c.divisible;
            rep.details["quotient_degree"] = c.quotient_degree;
            rep.details["expected_degree"] = c.expected_degree;
            if (!c.ok()) {
              rep.status = ResidualStatus::nonzero;
              rep.note = "factorization law fails";
            }
          }));
        }
  return out;
}

std::vector<Task> shift_tasks(const SuiteOptions& opt, SequenceCache& cache) {
  std::vector<Task> out;
  for (const auto& p : opt.grid)
    for (int n = 1; n < opt.N; ++n) {
      Json params = seed_json(p);
      params["n"] = n;
      out.push_back(guarded(base("backlund-shift", "q_" + std::to_string(n) + "->q_" + std::to_string(n + 1) +
                                                       p.to_string(), params),
                            [p, n, &opt, &cache](auto& rep) {
                              note_perturbation(rep, opt.perturb, false);
                              auto T = cache.get(Family::T, p, opt.N + 1, NormalizationStrategy::auto_primitive());
                              auto S = cache.get(Family::S, p, opt.N, NormalizationStrategy::auto_primitive());
                              const OkamotoParams b0 = chart_okamoto(p);
                              const OkamotoParams b{b0.b1, b0.b2, b0.b3 + n, b0.b4};
                              const RatFunc qn = qn_from_theorem(n, *T, *S);
                              const RatFunc next = qn_from_theorem(n + 1, *T, *S);
                              const RatFunc via_abc = backlund_qplus_abc(qn, b, opt.readings.bplus);
                              const RatFunc via_uv = backlund_qplus(p_long_form(qn, b), qn, b, opt.readings.uv);
                              rep.details["readings"] = {{"uv", to_string(opt.readings.uv)},
                                                         {"bplus", to_string(opt.readings.bplus)}};
                              rep.details["abc_equals_next"] = via_abc == next;
                              rep.details["uv_equals_next"] = via_uv == next;
                              Poly witness = (via_abc - next).num();
                              if (witness.is_zero()) witness = (via_uv - next).num();
                              set_residual(rep, witness);
                            }));
    }
  return out;
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt,
                                          SequenceCache& cache) {
  if (opt.N < 1) throw InvalidArgument("N must be >= 1");
  if (opt.grid.empty()) throw InvalidArgument("empty grid");
  std::vector<Task> tasks;
  if (name == "riccati")
    tasks = riccati_tasks(opt);
  else if (name == "seed-pvi")
    tasks = seed_pvi_tasks(opt);
  else if (name == "collapse")
    tasks = collapse_tasks(opt, cache);
  else if (name == "theorem-qn")
    tasks = theorem_tasks(opt, cache);
  else if (name == "lemma1")
    tasks = lemma1_tasks(opt);
  else if (name == "prop1")
    tasks = prop1_tasks(opt);
  else if (name == "prop2")
    tasks = prop2_tasks(opt);
  else if (name == "hankel")
    tasks = hankel_tasks(opt, cache);
  else if (name == "polynomiality")
    tasks = polynomiality_tasks(opt);
  else if (name == "h-sigma")
    tasks = h_sigma_tasks(opt);
  else if (name == "example1")
    tasks = example1_tasks(opt);
  else if (name == "backlund-shift")
    tasks = shift_tasks(opt, cache);
  else
    throw InvalidArgument("unknown suite '" + name + "'");
  return parallel_map<VerificationReport>(tasks.size(), opt.jobs, [&](std::size_t i) { return tasks[i](); });
}

}  // namespace pvitau
