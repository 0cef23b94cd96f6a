#include <doctest.h>

#include <random>

#include "pvitau/errors.hpp"
#include "pvitau/param_poly.hpp"
#include "pvitau/seeds.hpp"
#include "pvitau/toda.hpp"

using namespace pvitau;

namespace {

const ParamScalar R = ParamScalar::r();
const ParamScalar S = ParamScalar::s();

ParamPoly random_pp(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), c(-4, 4), e(0, 2);
  std::vector<ParamScalar> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) {
    MPoly2 p;
    for (int k = 0; k < 3; ++k) p += MPoly2::term(make_rational(c(rng), 1 + e(rng)), e(rng), e(rng));
    x = ParamScalar(p);
  }
  return ParamPoly(std::move(v));
}

}  // namespace

TEST_CASE("bivariate polynomial basics") {
  MPoly2 a = MPoly2::r() * MPoly2::r() - MPoly2::s() + MPoly2(3L);
  CHECK(a.to_string() == "r^2 - s + 3");
  CHECK(a.evaluate(Rational(2), Rational(5)) == 2);
  auto q = divide_exact(a * (MPoly2::r() + MPoly2::s()), MPoly2::r() + MPoly2::s());
  REQUIRE(q);
  CHECK(*q == a);
  CHECK(!divide_exact(a, MPoly2::r()));
}

TEST_CASE("parameter fractions normalize") {
  ParamScalar x((MPoly2::r() * MPoly2::s()), MPoly2::s());
  CHECK(x.is_polynomial());
  CHECK(x == R);
  ParamScalar y(MPoly2(1L), MPoly2::r().scaled(Rational(-2)) + MPoly2(4L));
  CHECK(y.den().leading_term().second == 1);
  CHECK(y.evaluate(Rational(3), Rational(0)) == make_rational(-1, 2));
  CHECK_THROWS_AS(y.evaluate(Rational(2), Rational(0)), ParameterPole);
  CHECK((y * ParamScalar(MPoly2::r() - MPoly2(2L))) == ParamScalar(make_rational(-1, 2)));
  CHECK((R / R) == ParamScalar(1L));
}

TEST_CASE("derivative of generic W(r,2,s)") {
  ParamPoly w = w_poly_generic(2);
  ParamPoly expected(std::vector<ParamScalar>{
      ParamScalar(0L) - (R + ParamScalar(2L)) * (S + ParamScalar(2L)),
      (R + ParamScalar(3L)) * (R + ParamScalar(2L))});
  CHECK(w.derivative() == expected);
  CHECK(w * ParamPoly(1L) == w);
}

TEST_CASE("specialization of generic W") {
  ParamPoly w = w_poly_generic(2);
  CHECK(pp_eval(w, Rational(3), Rational(1)) == Poly::parse("15t^2-15t+3"));
  CHECK(pp_eval(w, Rational(4), Rational(1)) == Poly::parse("21t^2-18t+3"));
  CHECK(pp_eval(ParamPoly(1L), Rational(7), make_rational(1, 3)) == Poly(1L));
  for (int m = 0; m <= 5; ++m)
    CHECK(pp_eval(w_poly_generic(m), make_rational(7, 3), make_rational(-2, 5)) ==
          w_poly(make_rational(7, 3), m, make_rational(-2, 5)));
}

TEST_CASE("membership in Z[r,s,t]") {
  for (int m = 1; m <= 3; ++m) {
    ParamPoly w = w_poly_generic(m).scaled(ParamScalar(Rational(factorial(m))));
    CHECK(pp_is_in_zrst(w).in_zrst);
  }
  auto st = pp_is_in_zrst(ParamPoly(R * ParamScalar(make_rational(1, 2))));
  CHECK(!st.in_zrst);
  CHECK(st.witness == "1/2*r");
  CHECK(pp_is_in_zrst(ParamPoly(1L)).in_zrst);
  CHECK(!pp_is_in_zrst(ParamPoly(ParamScalar(MPoly2(1L), MPoly2::r()))).in_zrst);
}

TEST_CASE("exact division round trip and failure") {
  std::mt19937 rng(3);
  for (int i = 0; i < 25; ++i) {
    ParamPoly a = random_pp(rng), b = random_pp(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
  ParamPoly t(Poly::t());
  CHECK_THROWS_AS(exact_div(t * t + ParamPoly(R), t), NonExactDivision);
  ParamPoly lin(std::vector<ParamScalar>{R, ParamScalar(1L)});  // t + r
  ParamPoly quad = lin * ParamPoly(std::vector<ParamScalar>{ParamScalar(1L), S});
  ParamPoly scaled = quad.scaled(ParamScalar(MPoly2(1L), MPoly2::r() + MPoly2(1L)));
  CHECK(exact_div(scaled, lin) ==
        ParamPoly(std::vector<ParamScalar>{ParamScalar(1L), S})
            .scaled(ParamScalar(MPoly2(1L), MPoly2::r() + MPoly2(1L))));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  const Rational r0 = make_rational(5, 3), s0 = make_rational(-7, 2);
  for (int i = 0; i < 25; ++i) {
    ParamPoly a = random_pp(rng), b = random_pp(rng);
    CHECK(pp_eval(a * b, r0, s0) == pp_eval(a, r0, s0) * pp_eval(b, r0, s0));
    CHECK(pp_eval(a + b, r0, s0) == pp_eval(a, r0, s0) + pp_eval(b, r0, s0));
    CHECK(pp_eval(a.derivative(), r0, s0) == pp_eval(a, r0, s0).derivative());
  }
}

TEST_CASE("generic Toda step commutes with specialization") {
  const Rational r0 = make_rational(7, 2), s0 = make_rational(2, 3);
  for (int m = 1; m <= 2; ++m) {
    GenericSequence g = generate_generic(Family::T, m, 4);
    REQUIRE(g.anomalies.empty());
    SeedParams p{r0, m, s0};
    TauSequence conc = generate_sequence(Family::T, p, 4, NormalizationStrategy::with(CnSchedule::toda_k()),
                                         {Rational(factorial(m)), false, TodaForm::introduction});
    for (int n = 1; n <= 4; ++n) CHECK(pp_eval(g.polys[n - 1], r0, s0) == conc.at(n));
  }
}

TEST_CASE("generic boundary values are nonzero") {
  for (int m = 1; m <= 2; ++m)
    for (Family f : {Family::T, Family::S}) {
      GenericSequence g = generate_generic(f, m, 4);
      for (const auto& T : g.polys) {
        CHECK(!T.evaluate_t(Rational(0)).is_zero());
        CHECK(!T.evaluate_t(Rational(1)).is_zero());
      }
    }
}
