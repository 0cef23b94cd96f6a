#include <doctest.h>

#include <complex>
#include <random>

#include "pvitau/errors.hpp"
#include "pvitau/poly.hpp"
#include "pvitau/ratfunc.hpp"

using namespace pvitau;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

Poly random_poly(std::mt19937& rng, int max_deg, int coef_range, bool rational) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-coef_range, coef_range),
      d(1, 7);
  std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) x = rational ? make_rational(c(rng), d(rng)) : Rational(c(rng));
  return Poly(std::move(v));
}

// Sylvester matrix determinant by fraction-free elimination over Q.
Rational sylvester_resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && M[piv][col] == 0) ++piv;
    if (piv == size) return Rational(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < size; ++r) {
      Rational f = M[r][col] / M[col][col];
      for (int k = col; k < size; ++k) M[r][k] -= f * M[col][k];
    }
  }
  return det;
}

// Durand-Kerner roots in long double; only used as a numeric cross-check.
std::vector<std::complex<long double>> numeric_roots(const Poly& p) {
  const int d = p.degree();
  std::vector<long double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = p.coeff(i).get_d() / p.leading().get_d();
  std::vector<std::complex<long double>> z(d);
  for (int i = 0; i < d; ++i) z[i] = std::pow(std::complex<long double>(0.4L, 0.9L), i);
  for (int it = 0; it < 500; ++it) {
    for (int i = 0; i < d; ++i) {
      std::complex<long double> num = 0;
      for (int k = d; k >= 0; --k) num = num * z[i] + c[k];
      std::complex<long double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= num / den;
    }
  }
  return z;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(10, -4)) == "-5/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(binomial(Rational(5), 7) == 0);
  CHECK(pochhammer(Rational(3), 2) == 12);
}

TEST_CASE("polynomial parse and print round trip") {
  Poly p = P("5t^2 - 5t + 1");
  CHECK(p == Poly::from_ints({1, -5, 5}));
  CHECK(Poly::parse(p.to_string()) == p);
  CHECK(P("-3/2*t^3+t") == Poly(std::vector<Rational>{0, 1, 0, make_rational(-3, 2)}));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("5x"), InvalidArgument);
}

TEST_CASE("poly ring operations") {
  CHECK(P("42t^4-84t^3+56t^2-14t+1").derivative() == P("168t^3-252t^2+112t-14"));
  CHECK(P("2t-1") * P("10t^2-10t+1") == P("20t^3-30t^2+12t-1"));
  CHECK(P("5t^2-5t+1").evaluate(Rational(1)) == 1);
  CHECK((P("t^2") - P("t^2")).is_zero());
  CHECK(P("t+1").compose(P("t^2")) == P("t^2+1"));
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("t^2-1"), P("t-1")) == P("t+1"));
  CHECK(exact_div(P("20t^3-30t^2+12t-1"), P("2t-1")) == P("10t^2-10t+1"));
  try {
    exact_div(P("t^2+1"), P("t-1"));
    FAIL("expected NonExactDivision");
  } catch (const NonExactDivision& e) {
    CHECK(e.remainder() == "2");
  }
  CHECK(exact_div(P("3/2*t^2-3/2"), P("1/2*t+1/2")) == P("3t-3"));
  CHECK(exact_div(P("t^2-1"), P("2t-2")) == P("1/2*t+1/2"));
}

TEST_CASE("gcd") {
  CHECK(gcd(P("t^2+t-2"), P("t-1")) == P("t-1"));
  CHECK(gcd(P("5t^2-5t+1"), P("35t^4-70t^3+51t^2-16t+2")) == Poly(1L));
  CHECK(gcd(P("3t-6"), Poly()) == P("t-2"));
  CHECK(gcd(P("t^3-t"), P("t^2+2t+1")) == P("t+1"));
  CHECK(coprime(P("t^2-2"), P("t^3-3")));
  CHECK(!coprime(P("t^2-1"), P("t^2+3t+2")));
}

TEST_CASE("content and primitive part") {
  auto cp = content_primitive(P("15t^2-15t+3"));
  CHECK(cp.content == 3);
  CHECK(cp.primitive == P("5t^2-5t+1"));
  cp = content_primitive(P("5t^2-5t+1"));
  CHECK(cp.content == 1);
  cp = content_primitive(P("-6t+12"));
  CHECK(cp.content == 6);
  CHECK(cp.primitive == P("-t+2"));
  CHECK(content_primitive(Poly()).content == 0);
  CHECK_THROWS_AS(content_primitive(P("1/2*t")), NonIntegralInput);
  CHECK(primitive_integer_part(P("-1/2*t+1/3")) == P("3t-2"));
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(P("5t^2-5t+1")) == 5);
  CHECK(discriminant(P("t^2-1")) == 4);
  CHECK(discriminant(P("20t^3-30t^2+12t-1")) == 2160);
  CHECK(discriminant(P("35t^4-70t^3+51t^2-16t+2")) == 60480);
  CHECK(discriminant(P("3t+1")) == 1);
  CHECK_THROWS_AS(discriminant(P("7")), ConstantPolynomial);
  CHECK(resultant(P("3t^3-2t+1/2"), P("2/3*t^2+5t-7")) == make_rational(-105173, 54));
}

TEST_CASE("discriminant numeric-root cross-check") {
  for (const char* s : {"20t^3-30t^2+12t-1", "35t^4-70t^3+51t^2-16t+2",
                        "42t^4-84t^3+56t^2-14t+1"}) {
    Poly p = P(s);
    auto z = numeric_roots(p);
    const int d = p.degree();
    std::complex<long double> prod = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) prod *= (z[i] - z[j]) * (z[i] - z[j]);
    long double lc = p.leading().get_d();
    long double numeric = (prod * std::pow(lc, 2 * d - 2)).real();
    long double exact = discriminant(p).get_d();
    CHECK(std::abs(numeric - exact) <= 1e-9L * std::abs(exact));
  }
}

TEST_CASE("ring axioms and round trips on random polynomials") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    bool rat = trial % 2 == 1;
    Poly a = random_poly(rng, 6, 9, rat), b = random_poly(rng, 6, 9, rat),
         c = random_poly(rng, 6, 9, rat);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    if (a.is_integral() && !a.is_zero()) {
      auto cp = content_primitive(a);
      CHECK(content(cp.primitive) == 1);
      CHECK(cp.primitive.scaled(Rational(cp.content)) == a);
    }
    if (a.degree() >= 1 && b.degree() >= 1) {
      Rational r = resultant(a, b);
      CHECK(r == sylvester_resultant(a, b));
      CHECK((r == 0) == (gcd(a, b).degree() > 0));
      Poly shared = a * P("t-3");
      CHECK(resultant(shared, b * P("t-3")) == 0);
    }
  }
}

TEST_CASE("karatsuba agrees with schoolbook") {
  std::mt19937 rng(7);
  auto saved = detail::karatsuba_threshold;
  for (int len : {1, 5, 30, 47, 64, 129}) {
    for (int len2 : {1, 13, 40, 64, 200}) {
      std::vector<Integer> a(len), b(len2);
      std::uniform_int_distribution<long> c(-1000000, 1000000);
      for (auto& x : a) x = c(rng);
      for (auto& x : b) x = c(rng);
      detail::karatsuba_threshold = 1u << 30;
      auto ref = detail::mul_integer(a, b);
      detail::karatsuba_threshold = 4;
      CHECK(detail::mul_integer(a, b) == ref);
    }
  }
  detail::karatsuba_threshold = saved;
}

TEST_CASE("rational function operations") {
  RatFunc t = RatFunc::t();
  CHECK((RatFunc(1L) / t).derivative() == RatFunc(Poly(-1L), P("t^2")));
  CHECK(RatFunc(1L) / t + RatFunc(1L) / (t - 1) == RatFunc(P("2t-1"), P("t^2-t")));
  RatFunc q(P("10t^3-12t^2+3t"), P("6t^2-6t+1"));
  CHECK(q.evaluate(Rational(2)) == make_rational(38, 13));
  CHECK_THROWS_AS((RatFunc(1L) / t).evaluate(Rational(0)), PoleEvaluation);
  CHECK_THROWS_AS(RatFunc(1L) / RatFunc(), DivisionByZeroFunction);
  RatFunc r(P("2t^2-2"), P("4t-4"));
  CHECK(r.num() == P("1/2*t+1/2"));
  CHECK(r.den() == Poly(1L));
}

TEST_CASE("rational function invariants after random operations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Poly n1 = random_poly(rng, 4, 5, true), d1 = random_poly(rng, 4, 5, false);
    Poly n2 = random_poly(rng, 4, 5, false), d2 = random_poly(rng, 4, 5, true);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    RatFunc a(n1, d1), b(n2, d2);
    for (const RatFunc& x : {a + b, a - b, a * b, a / b, a.derivative()}) {
      CHECK(x.den().leading() == 1);
      CHECK(gcd(x.num(), x.den()).degree() <= 0);
    }
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
  }
}
