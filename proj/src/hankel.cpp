#include "pvitau/hankel.hpp"

#include "pvitau/errors.hpp"

namespace pvitau {

FactoredFunction FactoredFunction::canonical() const {
  if (poly.is_zero()) return {poly, Rational(0)};
  const Poly u = Poly::from_ints({0, -1, 1});
  FactoredFunction out{poly, e};
  while (out.poly.degree() >= 2 && sgn(out.poly.coeff(0)) == 0 && sgn(out.poly.evaluate(Rational(1))) == 0) {
    out.poly = exact_div(out.poly, u);
    out.e += 1;
  }
  return out;
}

FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b) {
  return {a.poly * b.poly, a.e + b.e};
}

bool operator==(const FactoredFunction& a, const FactoredFunction& b) {
  FactoredFunction x = a.canonical(), y = b.canonical();
  return x.poly == y.poly && x.e == y.e;
}

std::string FactoredFunction::to_string() const {
  return "(" + poly.to_string() + ")*(t^2 - t)^(" + pvitau::to_string(e) + ")";
}

FactoredFunction delta_apply(const FactoredFunction& f) {
  const Poly u = Poly::from_ints({0, -1, 1});
  const Poly du = Poly::from_ints({-1, 2});
  return {u * f.poly.derivative() + (du * f.poly).scaled(f.e), f.e};
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return Poly(1L);
  bool negate = false;
  Poly prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly();
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

HankelResult hankel_check(int n, const SeedParams& p, const TauSequence& T) {
  if (n < 1) throw InvalidArgument("Hankel check needs n >= 1");
  HankelResult out;
  out.n = n;
  const Rational e = (p.r + 2) / 2;
  std::vector<FactoredFunction> chain{{w_poly(p.r, p.m, p.s), e}};
  for (int k = 1; k <= 2 * n - 2; ++k) chain.push_back(delta_apply(chain.back()));
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = chain[static_cast<std::size_t>(i + j)].poly;
  out.determinant = FactoredFunction{bareiss_determinant(std::move(m)), e * n}.canonical();
  out.expected = FactoredFunction{T.at(n + 1), Rational(n) * (n + p.r + 1) / 2}.canonical();
  if (out.determinant.poly.is_zero() || out.expected.poly.is_zero() ||
      out.determinant.e != out.expected.e || out.determinant.poly.degree() != out.expected.poly.degree())
    return out;
  Rational c = out.determinant.poly.leading() / out.expected.poly.leading();
  if (out.expected.poly.scaled(c) == out.determinant.poly) {
    out.proportional = true;
    out.constant = c;
  }
  return out;
}

}  // namespace pvitau
