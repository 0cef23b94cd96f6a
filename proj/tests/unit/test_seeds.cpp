#include <doctest.h>

#include <random>

#include "pvitau/errors.hpp"
#include "pvitau/seeds.hpp"

using namespace pvitau;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

// Oracle for W: integer binomials via Pascal's triangle.
Integer pascal(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Integer> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Poly w_oracle(long r, int m, long s) {
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    Integer v = pascal(r + m + 1 - j, m - j) * pascal(s + m, j);
    c[static_cast<std::size_t>(m - j)] = Rational(j % 2 ? Integer(-v) : v);
  }
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("W golden values") {
  CHECK(w_poly(Rational(3), 2, Rational(1)) == P("15t^2-15t+3"));
  CHECK(w_poly(Rational(5), 4, Rational(1)) == P("210t^4-420t^3+280t^2-70t+5"));
  CHECK(w_poly(make_rational(7, 3), 0, make_rational(-1, 2)) == Poly(1L));
  CHECK(w_poly(Rational(2), 3, Rational(0)) == P("20t^3-30t^2+12t-1"));
  CHECK_THROWS_AS(w_poly(Rational(1), -1, Rational(1)), InvalidArgument);
}

TEST_CASE("W agrees with integer binomial oracle") {
  for (long r = 0; r <= 6; ++r)
    for (long s = 0; s <= 5; ++s)
      for (int m = 0; m <= 6; ++m) CHECK(w_poly(Rational(r), m, Rational(s)) == w_oracle(r, m, s));
}

TEST_CASE("W degree, leading and constant coefficients") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (int i = 0; i < 40; ++i) {
    Rational r = make_rational(num(rng), den(rng)), s = make_rational(num(rng), den(rng));
    for (int m = 1; m <= 6; ++m) {
      Rational lead = binomial(r + m + 1, m), c0 = binomial(s + m, m);
      if (m % 2) c0 = -c0;
      if (sgn(lead) == 0 || sgn(c0) == 0) continue;
      Poly w = w_poly(r, m, s);
      CHECK(w.degree() == m);
      CHECK(w.leading() == lead);
      CHECK(w.coeff(0) == c0);
    }
  }
}

TEST_CASE("hypergeometric polynomial") {
  CHECK(hypergeom_z({Rational(3), 2, Rational(1)}) == P("6t^2-6t+1"));
  CHECK(hypergeom_z({Rational(1), 1, Rational(1)}) == P("1-t"));
  CHECK(hypergeom_z({Rational(4), 0, Rational(9)}) == Poly(1L));
  CHECK_THROWS_AS(hypergeom_z({Rational(3), 2, Rational(0)}), ParameterPole);
  CHECK_THROWS_AS(hypergeom_z({Rational(3), 3, Rational(-1)}), ParameterPole);
}

TEST_CASE("hypergeometric equation holds with the printed sign") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-15, 15), den(1, 5);
  for (int i = 0; i < 30; ++i) {
    SeedParams p{make_rational(num(rng), den(rng)), 1 + i % 6, make_rational(num(rng), den(rng)) + make_rational(1, 7)};
    CHECK(hypergeom_ode_residual(p).is_zero());
    if (sgn(p.r) != 0) CHECK(!hypergeom_ode_residual(p, -1).is_zero());
  }
}

TEST_CASE("V family") {
  CHECK(v_poly(make_rational(5, 2), 3, 0, 4) == Poly(-1L));
  CHECK(v_poly(Rational(1), 1, 2, 1) == P("-3t^2+6t-3"));
  for (int a = 0; a < 4; ++a)
    for (int n = 0; n < 3; ++n)
      CHECK(v_poly(Rational(a), 2, 1, n) == Poly(std::vector<Rational>{Rational(-(n + 2 + a)), Rational(a + 1)}));
}

TEST_CASE("parameter charts") {
  OkamotoParams b = chart_okamoto({Rational(3), 2, Rational(1)});
  CHECK(b.b1 == 3);
  CHECK(b.b2 == 0);
  CHECK(b.b3 == 2);
  CHECK(b.b4 == -1);
  OkamotoParams c = chart_okamoto({Rational(5), 4, Rational(1)});
  CHECK(c.to_string() == "(5,0,4,-1)");
  SeedParams sh = chart_sigma_shift({Rational(3), 2, Rational(1)});
  CHECK(sh.to_string() == "(2,3,0)");

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  for (int i = 0; i < 50; ++i) {
    SeedParams p{make_rational(num(rng), den(rng)), i % 7, make_rational(num(rng), den(rng))};
    OkamotoParams q = chart_okamoto(p);
    CHECK(q.b1 - q.b3 == 1);
    SeedParams back = chart_sigma_unshift(chart_sigma_shift(p));
    CHECK(back.r == p.r);
    CHECK(back.m == p.m);
    CHECK(back.s == p.s);
    OkamotoParams qs = chart_okamoto(chart_sigma_shift(p));
    CHECK(qs.b4 - q.b4 == 1);
    CHECK(qs.b1 == q.b1);
    CHECK(qs.b2 == q.b2);
    CHECK(qs.b3 == q.b3);
  }
}

TEST_CASE("P_VI parameters") {
  SeedParams p{Rational(3), 2, Rational(1)};
  CHECK(pvi_params_at(1, p).to_string() == "(8,-9/2,9/2,-4)");
  CHECK(pvi_params_at(0, p).to_string() == "(9/2,-9/2,9/2,-3/2)");
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  for (int i = 0; i < 60; ++i) {
    SeedParams q{make_rational(num(rng), den(rng)), i % 6, make_rational(num(rng), den(rng))};
    const int n = i % 5;
    CHECK(pvi_params_at(n, q) == pvi_params_from_okamoto(chart_okamoto(q), n));
  }
}

TEST_CASE("seed solution") {
  RatFunc q = seed_q({Rational(3), 2, Rational(1)});
  CHECK(q == RatFunc(P("10t^3-12t^2+3t"), P("6t^2-6t+1")));
  CHECK(q.evaluate(Rational(2)) == make_rational(38, 13));
  CHECK(seed_q({Rational(1), 1, Rational(1)}) == RatFunc(P("2t")));
  CHECK_THROWS_AS(seed_q({Rational(0), 1, Rational(1)}), ParameterPole);
}

TEST_CASE("identity between z and W") {
  CHECK(lemma1_residual({Rational(3), 2, Rational(1)}).is_zero());
  CHECK(lemma1_residual({Rational(5), 4, Rational(1)}).is_zero());
  CHECK(lemma1_residual({make_rational(2, 3), 0, make_rational(5, 4)}).is_zero());

  // Both sides at (3,2,1) expanded independently.
  Poly z = P("6t^2-6t+1"), t = Poly::t();
  Poly lhs = z.derivative().scaled(Rational(-3)) + (t * z.derivative() + z.scaled(Rational(3))).scaled(Rational(6));
  CHECK(lhs == P("180t^2-180t+36"));
  CHECK(w_poly(Rational(3), 2, Rational(1)).scaled(Rational(12)) == lhs);

  const Rational grid[] = {make_rational(-7, 2), make_rational(1, 3), Rational(2), make_rational(9, 5),
                           Rational(6)};
  for (int m = 1; m <= 8; ++m)
    for (const auto& r : grid)
      for (const auto& s : grid) CHECK(lemma1_residual({r, m, s}).is_zero());
  CHECK_THROWS_AS(lemma1_residual({Rational(1), 2, Rational(-1)}), ParameterPole);
}
