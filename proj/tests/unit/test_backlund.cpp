#include <doctest.h>

#include <random>

#include "pvitau/backlund.hpp"
#include "pvitau/errors.hpp"
#include "pvitau/toda.hpp"

using namespace pvitau;

namespace {

const RatFunc t = RatFunc::t();
const RatFunc one(1L);

RatFunc rf(const Rational& x) { return RatFunc(x); }

// Straight transcription of the Hamiltonian with its divisions by q, q-1, q-t.
RatFunc hamiltonian_oracle(const RatFunc& p, const RatFunc& q, const OkamotoParams& b) {
  RatFunc pref = q * (q - one) * (q - t) / (t * (t - one));
  RatFunc br = p * p - p * (rf(b.b1 + b.b2) / q + rf(b.b1 - b.b2) / (q - one) + rf(b.b3 + b.b4) / (q - t)) +
               rf((b.b1 + b.b3) * (b.b1 + b.b4)) / (q * (q - one));
  return pref * br;
}

// q_n from the log-derivative formula over T_{n+1} and S_n.
RatFunc theorem_q(int n, const SeedParams& p, const TauSequence& T, const TauSequence& S) {
  auto ld = [](const Poly& x) { return RatFunc(x.derivative(), x); };
  RatFunc br = ld(S.at(n)) - ld(T.at(n + 1)) - rf(p.s + n - 1) / t - rf(n + p.r - p.m - p.s) / (t - one);
  return t + t * (t - one) / rf(p.r + n) * br;
}

const SeedParams seeds[] = {{Rational(3), 2, Rational(1)},
                            {Rational(4), 3, Rational(1)},
                            {Rational(5), 4, Rational(1)},
                            {Rational(1), 1, Rational(1)},
                            {make_rational(7, 2), 2, make_rational(-1, 3)},
                            {make_rational(-5, 3), 3, make_rational(9, 4)}};

OkamotoParams random_b(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  auto r = [&] { return make_rational(num(rng), den(rng)); };
  return {r(), r(), r(), r()};
}

PhasePoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-60, 60), tn(2, 60);
  return {make_rational(num(rng), 7), make_rational(num(rng), 11) + make_rational(1, 13),
          make_rational(tn(rng), 13) + make_rational(1, 17)};
}

}  // namespace

TEST_CASE("Riccati equation") {
  const SeedParams p{Rational(3), 2, Rational(1)};
  CHECK(riccati_residual(seed_q(p), chart_okamoto(p)).is_zero());
  CHECK(!riccati_residual(t, chart_okamoto(p)).is_zero());
  OkamotoParams b111 = chart_okamoto({Rational(1), 1, Rational(1)});
  CHECK(b111.to_string() == "(3/2,1/2,1/2,-1/2)");
  CHECK(riccati_residual(RatFunc(Poly::parse("2t")), b111).is_zero());
  for (const auto& s : seeds) CHECK(riccati_residual(seed_q(s), chart_okamoto(s)).is_zero());
}

TEST_CASE("momentum on seeds") {
  const SeedParams p{Rational(3), 2, Rational(1)};
  const OkamotoParams b = chart_okamoto(p);
  RatFunc q = seed_q(p);
  RatFunc mom = p_from_seed(q, b);
  CHECK(mom == rf(Rational(2)) / (q - t));
  CHECK(mom.evaluate(Rational(2)) == make_rational(13, 6));
  CHECK(p_long_form(q, b) == mom);
  CHECK_THROWS_AS(p_from_seed(RatFunc(Poly::parse("3t+1")), b), RiccatiViolation);
  CHECK_THROWS_AS(p_long_form(t, b), DegenerateQ);
  for (const auto& s : seeds) {
    OkamotoParams c = chart_okamoto(s);
    RatFunc qs = seed_q(s);
    CHECK(hamiltonian_flow_residual(p_from_seed(qs, c), qs, c).is_zero());
  }
}

TEST_CASE("Hamiltonian") {
  const SeedParams p{Rational(3), 2, Rational(1)};
  const OkamotoParams b = chart_okamoto(p);
  RatFunc q = seed_q(p), mom = p_from_seed(q, b);
  RatFunc H = hamiltonian_H(mom, q, b);
  CHECK(H == hamiltonian_oracle(mom, q, b));
  HamiltonianData d = hamiltonian_data(mom, q, b);
  const Rational two(2);
  Rational sig = b.b1 * b.b3 + b.b1 * b.b4 + b.b3 * b.b4;
  Rational e2 = b.b1 * b.b2 + b.b1 * b.b3 + b.b1 * b.b4 + b.b2 * b.b3 + b.b2 * b.b4 + b.b3 * b.b4;
  CHECK((d.h.evaluate(two) - sig * two + e2 / 2) / 2 == H.evaluate(two));
  for (const auto& s : seeds) {
    OkamotoParams c = chart_okamoto(s);
    RatFunc qs = seed_q(s), ps = p_from_seed(qs, c);
    CHECK(hamiltonian_H(ps, qs, c) == hamiltonian_oracle(ps, qs, c));
  }

  RatFunc qq(Poly::parse("t^2+3"));
  CHECK(hamiltonian_H(RatFunc(0L), qq, b) ==
        (qq - t) * rf((b.b1 + b.b3) * (b.b1 + b.b4)) / (t * (t - one)));
  RatFunc pp(Poly::parse("5t-1"));
  CHECK(hamiltonian_H(pp, qq, {}) == qq * (qq - one) * (qq - t) * pp * pp / (t * (t - one)));
  CHECK_THROWS_AS(hamiltonian_H(pp, t, b), DegenerateQ);
  CHECK_THROWS_AS(hamiltonian_H(pp, one, b), DegenerateQ);
}

TEST_CASE("Backlund transformation collapses on seeds") {
  const SeedParams p{Rational(3), 2, Rational(1)};
  const OkamotoParams b = chart_okamoto(p);
  RatFunc q = seed_q(p);
  RatFunc q1 = q1_collapsed(q, b);
  CHECK(q1.evaluate(Rational(2)) == make_rational(25, 44));
  CHECK(q1 == t * (q - one) / ((rf(2) * t - one) * q - t));
  for (const auto& s : seeds) {
    OkamotoParams c = chart_okamoto(s);
    RatFunc qs = seed_q(s), ps = p_from_seed(qs, c);
    RatFunc expect = q1_collapsed(qs, c);
    CHECK(backlund_qplus(ps, qs, c) == expect);
    CHECK(qplus_collapsed(ps, qs, c) == expect);
    CHECK(qplus_collapsed(ps, qs, c, CollapseReading::alternative) != expect);
    CHECK_THROWS_AS(backlund_qplus_abc(qs, c), DegenerateTransformation);
  }
  CHECK(q1_collapsed(one, b).is_zero());
  RatFunc qt = q1_collapsed(t, b);
  CHECK(qt == rf(b.b1 + b.b2) * (t - one) / (rf(2 * b.b1) * t + rf(b.b2 - b.b1) - rf(b.b1 + b.b2)));
  CHECK_THROWS_AS(q1_collapsed(q, {Rational(1), Rational(0), Rational(1), Rational(0)}), ChartViolation);
}

TEST_CASE("collapse is an identity in (p, q, t)") {
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    OkamotoParams b = random_b(rng);
    b.b3 = b.b1 - 1;
    PhasePoint x = random_point(rng);
    CHECK(collapse_cross_residual(x.p, x.q, x.t, b) == 0);
    CHECK(collapse_cross_residual(x.p, x.q, x.t, b, UVReading::corrected, CollapseReading::alternative) != 0);
  }
  OkamotoParams off{Rational(2), Rational(1), Rational(5), Rational(0)};
  CHECK_THROWS_AS(collapse_cross_residual(Rational(1), Rational(3), Rational(5), off), ChartViolation);
}

TEST_CASE("phase-space check of both routes") {
  std::mt19937 rng(17);
  for (int i = 0; i < 6; ++i) {
    OkamotoParams b = random_b(rng);
    PhasePoint x = random_point(rng);
    PhaseSpaceCheck c = phase_space_check(x, b);
    CHECK(c.residual_q.is_zero_to_prec());
    CHECK(c.routes_agree);
    CHECK(c.residual_uv.is_zero_to_prec());
    CHECK(c.residual_abc.is_zero_to_prec());
    CHECK(c.residual_uv.prec() >= 4);

    PhaseSpaceCheck pr = phase_space_check(x, b, UVReading::printed, BReading::printed);
    CHECK(!pr.residual_uv.is_zero_to_prec());
    CHECK(!pr.residual_abc.is_zero_to_prec());
    CHECK(!pr.routes_agree);
  }
}

TEST_CASE("Hamiltonian flow series solves the system") {
  const OkamotoParams b{make_rational(7, 3), make_rational(-2, 5), make_rational(3, 7), make_rational(5, 11)};
  const PhasePoint x{make_rational(3, 7), make_rational(-4, 11), make_rational(29, 13)};
  FlowSeries f = hamiltonian_flow(x, b, 7);
  CHECK(f.q.value() == x.q);
  CHECK(f.p.value() == x.p);
  CHECK(f.q.prec() == 7);
  CHECK_THROWS_AS(hamiltonian_flow({Rational(1), Rational(2), Rational(1)}, b, 5), InvalidArgument);
}

TEST_CASE("both routes map q_n to q_{n+1}") {
  const SeedParams params[] = {{Rational(3), 2, Rational(1)}, {Rational(4), 3, Rational(1)},
                               {make_rational(7, 2), 2, make_rational(-1, 3)}};
  for (const auto& p : params) {
    auto T = generate_sequence(Family::T, p, 5, NormalizationStrategy::raw());
    auto S = generate_sequence(Family::S, p, 4, NormalizationStrategy::raw());
    OkamotoParams b = chart_okamoto(p);
    CHECK(theorem_q(1, p, T, S) == q1_collapsed(seed_q(p), b));
    for (int n = 1; n <= 2; ++n) {
      OkamotoParams bn{b.b1, b.b2, b.b3 + n, b.b4};
      RatFunc qn = theorem_q(n, p, T, S), next = theorem_q(n + 1, p, T, S);
      CHECK(backlund_qplus_abc(qn, bn) == next);
      CHECK(backlund_qplus(p_long_form(qn, bn), qn, bn) == next);
      CHECK(backlund_qplus(p_long_form(qn, bn), qn, bn, UVReading::printed) != next);
      CHECK(backlund_qplus_abc(qn, bn, BReading::printed) != next);
    }
  }
}

TEST_CASE("H1, tau1 and the ansatz") {
  const OkamotoParams b = chart_okamoto({Rational(3), 2, Rational(1)});
  H1Data d = h1_and_tau1(b);
  CHECK(d.H1 == rf(-6) / t - rf(6) / (t - one));
  CHECK(d.tau1_exponents == std::pair<Rational, Rational>(-6, -6));
  CHECK(d.sigma1_exponents == std::pair<Rational, Rational>(-9, -9));
  PolyTimesExponents tau1{Poly(1L), d.tau1_exponents.first, d.tau1_exponents.second};
  CHECK(tau1.log_derivative() == d.H1);
  CHECK(ansatz_exponents(1, b) == d.tau1_exponents);
  CHECK(ansatz_exponents(2, b) == std::pair<Rational, Rational>(-8, -8));

  OkamotoParams sym{make_rational(5, 2), make_rational(5, 2), make_rational(3, 2), make_rational(-5, 2)};
  CHECK(h1_and_tau1(sym).H1.is_zero());
  CHECK_THROWS_AS(h1_and_tau1({Rational(0), Rational(0), Rational(0), Rational(0)}), ChartViolation);

  Poly T = Poly::parse("35t^4-70t^3+51t^2-16t+2");
  PolyTimesExponents tau = tau_implant(T, 3, b);
  CHECK(tau_extract(tau, 3, b) == T);
  CHECK_THROWS_AS(tau_extract(tau, 2, b), InvalidArgument);

  for (const auto& s : seeds) {
    OkamotoParams c = chart_okamoto(s);
    RatFunc qs = seed_q(s), ps = p_from_seed(qs, c);
    CHECK(hamiltonian_after_shift(ps, qs, c) == h1_and_tau1(c).H1);
  }
}

TEST_CASE("closed form of T2'/T2") {
  CHECK(prop1_residual({Rational(3), 2, Rational(1)}).is_zero());
  CHECK(prop1_residual({Rational(5), 4, Rational(1)}).is_zero());
  CHECK(prop1_residual({make_rational(5, 3), 0, make_rational(-2, 7)}).is_zero());
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(-25, 25), den(1, 6);
  for (int i = 0; i < 30; ++i) {
    SeedParams p{make_rational(num(rng), den(rng)) + make_rational(1, 11), 1 + i % 5,
                 make_rational(num(rng), den(rng)) + make_rational(1, 13)};
    CHECK(prop1_residual(p).is_zero());
  }
  CHECK_THROWS_AS(prop1_residual({Rational(0), 0, Rational(1)}), ParameterPole);
}

TEST_CASE("h-equation") {
  OkamotoParams b{make_rational(1, 2), Rational(-3), make_rational(7, 5), Rational(2)};
  CHECK(h_sigma_residual(rf(make_rational(11, 4)), b).is_zero());
  CHECK(h_sigma_residual(rf(Rational(5)), {}).is_zero());
  bool alternative_fails = false;
  for (const auto& s : seeds) {
    OkamotoParams c = chart_okamoto(s);
    RatFunc qs = seed_q(s), ps = p_from_seed(qs, c);
    RatFunc h = hamiltonian_data(ps, qs, c).h;
    CHECK(h_sigma_residual(h, c).is_zero());
    alternative_fails |= !h_sigma_residual(h, c, HodeReading::alternative).is_zero();
  }
  CHECK(alternative_fails);
}

TEST_CASE("reading names round trip") {
  CHECK(parse_uv_reading(to_string(UVReading::printed)) == UVReading::printed);
  CHECK(parse_b_reading("corrected") == BReading::corrected);
  CHECK(parse_collapse_reading("alternative") == CollapseReading::alternative);
  CHECK(parse_hode_reading("printed") == HodeReading::printed);
  CHECK_THROWS_AS(parse_uv_reading("x"), InvalidArgument);
}
