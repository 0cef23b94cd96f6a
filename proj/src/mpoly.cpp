#include "pvitau/mpoly.hpp"

#include "pvitau/errors.hpp"

namespace pvitau {

MPoly2::MPoly2(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

MPoly2 MPoly2::r() { return term(Rational(1), 1, 0); }
MPoly2 MPoly2::s() { return term(Rational(1), 0, 1); }

MPoly2 MPoly2::term(const Rational& c, int er, int es) {
  MPoly2 p;
  if (sgn(c) != 0) p.terms_.emplace(Monomial{er, es}, c);
  return p;
}

bool MPoly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational MPoly2::constant_value() const {
  auto it = terms_.find(Monomial{0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> MPoly2::leading_term() const { return *terms_.begin(); }

int MPoly2::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.first + terms_.begin()->first.second;
}

Rational MPoly2::evaluate(const Rational& r0, const Rational& s0) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * pow(r0, m.first) * pow(s0, m.second);
  return acc;
}

MPoly2 MPoly2::scaled(const Rational& c) const {
  if (sgn(c) == 0) return MPoly2();
  MPoly2 out(*this);
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

bool MPoly2::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void MPoly2::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly2& MPoly2::operator+=(const MPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly2& MPoly2::operator-=(const MPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly2 operator+(const MPoly2& a, const MPoly2& b) {
  MPoly2 out(a);
  out += b;
  return out;
}

MPoly2 operator-(const MPoly2& a, const MPoly2& b) {
  MPoly2 out(a);
  out -= b;
  return out;
}

MPoly2 operator*(const MPoly2& a, const MPoly2& b) {
  MPoly2 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(Monomial{ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

MPoly2 MPoly2::operator-() const { return scaled(Rational(-1)); }

std::string MPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string vars;
    if (m.first > 0) vars += m.first == 1 ? "r" : "r^" + std::to_string(m.first);
    if (m.second > 0) {
      if (!vars.empty()) vars += "*";
      vars += m.second == 1 ? "s" : "s^" + std::to_string(m.second);
    }
    if (vars.empty()) {
      out += pvitau::to_string(mag);
    } else {
      if (mag != 1) out += pvitau::to_string(mag) + "*";
      out += vars;
    }
  }
  return out;
}

std::optional<MPoly2> divide_exact(const MPoly2& a, const MPoly2& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("division by the zero parameter polynomial");
  MPoly2 rem(a), q;
  const auto [mb, cb] = b.leading_term();
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading_term();
    if (m.first < mb.first || m.second < mb.second) return std::nullopt;
    MPoly2 t = MPoly2::term(c / cb, m.first - mb.first, m.second - mb.second);
    q += t;
    rem -= t * b;
  }
  return q;
}

ParamScalar::ParamScalar(const MPoly2& num, const MPoly2& den) {
  if (den.is_zero()) throw DivisionByZeroFunction("parameter fraction with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly2(1L);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(Rational(1) / den.constant_value());
    den_ = MPoly2(1L);
    return;
  }
  if (auto q = divide_exact(num, den)) {
    num_ = std::move(*q);
    den_ = MPoly2(1L);
    return;
  }
  Integer l(1), g(0);
  for (const auto& [m, c] : den.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : den.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational f = make_rational(l, g);
  if (sgn(den.leading_term().second) < 0) f = -f;
  num_ = num.scaled(f);
  den_ = den.scaled(f);
}

Rational ParamScalar::evaluate(const Rational& r0, const Rational& s0) const {
  Rational d = den_.evaluate(r0, s0);
  if (sgn(d) == 0)
    throw ParameterPole("parameter denominator " + den_.to_string() + " vanishes at r=" +
                        pvitau::to_string(r0) + ", s=" + pvitau::to_string(s0));
  return num_.evaluate(r0, s0) / d;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant())
      return ParamScalar(a.num_ + b.num_, a.den_, ParamScalar::Normalized{});
    return ParamScalar(a.num_ + b.num_, a.den_);
  }
  return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar();
  if (a.den_.is_constant() && b.den_.is_constant())
    return ParamScalar(a.num_ * b.num_, MPoly2(1L), ParamScalar::Normalized{});
  MPoly2 an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant())
    if (auto q = divide_exact(an, bd)) {
      an = std::move(*q);
      bd = MPoly2(1L);
    }
  if (!ad.is_constant())
    if (auto q = divide_exact(bn, ad)) {
      bn = std::move(*q);
      ad = MPoly2(1L);
    }
  return ParamScalar(an * bn, ad * bd);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("division by the zero parameter scalar");
  return a * ParamScalar(b.den_, b.num_);
}

ParamScalar ParamScalar::operator-() const { return ParamScalar(-num_, den_, Normalized{}); }

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamScalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace pvitau
