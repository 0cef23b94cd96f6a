#include "pvitau/ratfunc.hpp"

#include "pvitau/errors.hpp"

namespace pvitau {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.degree() > 0 ? exact_div(num, g) : num;
  Poly d = g.degree() > 0 ? exact_div(den, g) : den;
  Rational inv = Rational(1) / d.leading();
  num_ = n.scaled(inv);
  den_ = d.scaled(inv);
}

RatFunc RatFunc::derivative() const {
  if (den_.degree() == 0) return RatFunc(num_.derivative(), Poly(1L), Reduced{});
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw PoleEvaluation("evaluation at a pole t=" + pvitau::to_string(x));
  return num_.evaluate(x) / d;
}

RatFunc RatFunc::compose(const Poly& inner) const {
  return RatFunc(num_.compose(inner), den_.compose(inner));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroFunction("inverse of the zero function");
  Rational inv = Rational(1) / num_.leading();
  return RatFunc(den_.scaled(inv), num_.scaled(inv), Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.degree() == 0) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (coprime(a.den_, b.den_)) {
    Poly n = a.num_ * b.den_ + b.num_ * a.den_;
    if (n.is_zero()) return RatFunc();
    return RatFunc(std::move(n), a.den_ * b.den_, RatFunc::Reduced{});
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (bd.degree() > 0 && an.degree() > 0) {
    Poly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (ad.degree() > 0 && bn.degree() > 0) {
    Poly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  Poly n = an * bn, d = ad * bd;
  Rational inv = Rational(1) / d.leading();
  return RatFunc(n.scaled(inv), d.scaled(inv), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("division by the zero function");
  return a * b.inverse();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc pow(const RatFunc& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  return RatFunc(pow(a.num(), e), pow(a.den(), e));
}

}  // namespace pvitau
