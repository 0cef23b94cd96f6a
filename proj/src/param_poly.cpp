#include "pvitau/param_poly.hpp"

#include <algorithm>
#include <optional>

#include "pvitau/errors.hpp"

namespace pvitau {

ParamPoly::ParamPoly(const ParamScalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

ParamPoly::ParamPoly(std::vector<ParamScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly::ParamPoly(const Poly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) c_.emplace_back(c);
  trim();
}

ParamPoly ParamPoly::monomial(const ParamScalar& c, int degree) {
  if (c.is_zero()) return ParamPoly();
  std::vector<ParamScalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return ParamPoly(std::move(v));
}

void ParamPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamScalar ParamPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return ParamScalar();
  return c_[static_cast<std::size_t>(i)];
}

ParamPoly ParamPoly::derivative() const {
  if (c_.size() <= 1) return ParamPoly();
  std::vector<ParamScalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * ParamScalar(static_cast<long>(i));
  return ParamPoly(std::move(d));
}

ParamPoly ParamPoly::scaled(const ParamScalar& s) const {
  std::vector<ParamScalar> v(c_);
  for (auto& c : v) c *= s;
  return ParamPoly(std::move(v));
}

ParamScalar ParamPoly::evaluate_t(const Rational& t0) const {
  ParamScalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ParamScalar(t0) + *it;
  return acc;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  std::vector<ParamScalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] = a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::operator-() const {
  std::vector<ParamScalar> v(c_);
  for (auto& c : v) c = -c;
  return ParamPoly(std::move(v));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  std::vector<ParamScalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return ParamPoly(std::move(v));
}

std::string ParamPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const ParamScalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i >= 1) out += "*t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

using TriPoly = std::vector<MPoly2>;  // index = t-degree

std::optional<TriPoly> as_polynomial(const ParamPoly& a) {
  TriPoly out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    if (!c.is_polynomial()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

// Division in Q[r,s,t] with t-degree first, then grlex in (r,s).
std::optional<TriPoly> divide_polynomial(TriPoly rem, const TriPoly& b) {
  const std::size_t db = b.size() - 1;
  const auto [mb, cb] = b.back().leading_term();
  TriPoly q(rem.size() >= b.size() ? rem.size() - db : 0);
  for (;;) {
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    if (rem.empty()) return q;
    if (rem.size() < b.size()) return std::nullopt;
    const std::size_t shift = rem.size() - 1 - db;
    const auto [m, c] = rem.back().leading_term();
    if (m.first < mb.first || m.second < mb.second) return std::nullopt;
    MPoly2 t = MPoly2::term(c / cb, m.first - mb.first, m.second - mb.second);
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= t * b[j];
    q[shift] += t;
  }
}

}  // namespace

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("division by the zero parameter polynomial");
  if (a.is_zero()) return ParamPoly();
  if (a.degree() < b.degree()) throw NonExactDivision(a.to_string(), a.degree());
  auto pa = as_polynomial(a), pb = as_polynomial(b);
  if (pa && pb)
    if (auto q = divide_polynomial(*pa, *pb)) {
      std::vector<ParamScalar> v;
      v.reserve(q->size());
      for (auto& c : *q) v.emplace_back(std::move(c));
      return ParamPoly(std::move(v));
    }
  std::vector<ParamScalar> rem = a.coeffs();
  const int db = b.degree();
  std::vector<ParamScalar> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    ParamScalar c = rem[static_cast<std::size_t>(i + db)] / b.leading();
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db));
  ParamPoly remainder(std::move(rem));
  if (!remainder.is_zero()) throw NonExactDivision(remainder.to_string(), remainder.degree());
  return ParamPoly(std::move(q));
}

Poly pp_eval(const ParamPoly& a, const Rational& r0, const Rational& s0) {
  std::vector<Rational> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(c.evaluate(r0, s0));
  return Poly(std::move(v));
}

ZrstStatus pp_is_in_zrst(const ParamPoly& a) {
  ZrstStatus st;
  for (int i = 0; i <= a.degree(); ++i) {
    const ParamScalar& c = a.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_polynomial() || !c.num().has_integer_coefficients()) {
      st.in_zrst = false;
      st.t_degree = i;
      st.witness = c.to_string();
      return st;
    }
  }
  return st;
}

}  // namespace pvitau
