#include "pvitau/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "pvitau/errors.hpp"

namespace pvitau {

namespace detail {

std::size_t karatsuba_threshold = 24;

namespace {

using ZIt = Integer*;
using ZCIt = const Integer*;

void schoolbook_add(ZCIt a, std::size_t na, ZCIt b, std::size_t nb, ZIt out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < nb; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// out[0 .. na+nb-1) += a*b
void karatsuba_add(ZCIt a, std::size_t na, ZCIt b, std::size_t nb, ZIt out) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb == 0) return;
  if (nb < karatsuba_threshold) {
    schoolbook_add(a, na, b, nb, out);
    return;
  }
  if (2 * nb <= na) {
    for (std::size_t off = 0; off < na; off += nb)
      karatsuba_add(a + off, std::min(nb, na - off), b, nb, out + off);
    return;
  }
  const std::size_t h = (na + 1) / 2;
  const std::size_t na1 = na - h;
  const std::size_t nb1 = nb > h ? nb - h : 0;
  const std::size_t nb0 = nb - nb1;
  if (nb1 == 0) {
    karatsuba_add(a, h, b, nb0, out);
    karatsuba_add(a + h, na1, b, nb0, out + h);
    return;
  }
  std::vector<Integer> z0(h + nb0 - 1), z2(na1 + nb1 - 1);
  karatsuba_add(a, h, b, nb0, z0.data());
  karatsuba_add(a + h, na1, b + h, nb1, z2.data());
  std::vector<Integer> sa(a, a + h), sb(b, b + nb0);
  for (std::size_t i = 0; i < na1; ++i) sa[i] += a[h + i];
  for (std::size_t i = 0; i < nb1; ++i) sb[i] += b[h + i];
  std::vector<Integer> z1(sa.size() + sb.size() - 1);
  karatsuba_add(sa.data(), sa.size(), sb.data(), sb.size(), z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) {
    z1[i] -= z0[i];
    out[i] += z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    z1[i] -= z2[i];
    out[2 * h + i] += z2[i];
  }
  for (std::size_t i = 0; i < z1.size(); ++i)
    if (sgn(z1[i]) != 0) out[h + i] += z1[i];
}

}  // namespace

std::vector<Integer> mul_integer(const std::vector<Integer>& a,
                                 const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  karatsuba_add(a.data(), a.size(), b.data(), b.size(), out.data());
  return out;
}

}  // namespace detail

namespace {

struct IntForm {
  std::vector<Integer> z;  // poly = z / den
  Integer den;
};

IntForm int_form(const Poly& p) {
  IntForm f;
  f.den = denominator_lcm(p);
  f.z.reserve(p.coeffs().size());
  if (f.den == 1) {
    for (const auto& c : p.coeffs()) f.z.push_back(c.get_num());
  } else {
    for (const auto& c : p.coeffs()) {
      Integer v;
      mpz_divexact(v.get_mpz_t(), f.den.get_mpz_t(), c.get_den_mpz_t());
      v *= c.get_num();
      f.z.push_back(std::move(v));
    }
  }
  return f;
}

Poly from_int_form(std::vector<Integer> z, const Integer& den) {
  std::vector<Rational> c;
  c.reserve(z.size());
  if (den == 1) {
    for (auto& v : z) c.emplace_back(std::move(v));
  } else {
    for (auto& v : z) c.push_back(make_rational(v, den));
  }
  return Poly(std::move(c));
}

Integer vec_content(const std::vector<Integer>& z) {
  Integer g(0);
  for (const auto& v : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void trim_vec(std::vector<Integer>& z) {
  while (!z.empty() && sgn(z.back()) == 0) z.pop_back();
}

// lc(b)^{deg a - deg b + 1} a = q b + r over Z; returns r.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a,
                                      const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  if (a.size() < b.size()) return a;
  for (std::size_t top = a.size() - 1;; --top) {
    Integer c = a[top];
    for (std::size_t i = 0; i < top; ++i) a[i] *= lb;
    a[top] = 0;
    const std::size_t shift = top - db;
    if (sgn(c) != 0)
      for (std::size_t j = 0; j < db; ++j)
        mpz_submul(a[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    if (top == db) break;
  }
  a.resize(db);
  trim_vec(a);
  return a;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const std::vector<Integer>& z, u64 p) {
  std::vector<u64> r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), static_cast<unsigned long>(p));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Degree of gcd over F_p, -1 when both are zero.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 c = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

constexpr std::array<u64, 6> kPrimes = {2147483647ULL, 2147483629ULL,
                                        2147483587ULL, 2147483579ULL,
                                        2147483563ULL, 2147483549ULL};

// True only when a prime certifies coprimality; false means undecided.
bool coprime_certified(const std::vector<Integer>& a,
                       const std::vector<Integer>& b) {
  int tried = 0;
  for (u64 p : kPrimes) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0)
      continue;
    if (gcd_degree_mod(reduce_mod(a, p), reduce_mod(b, p), p) == 0) return true;
    if (++tried == 3) break;
  }
  return false;
}

std::vector<Integer> primitive_vec(std::vector<Integer> z) {
  Integer g = vec_content(z);
  if (g > 1)
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  if (!z.empty() && sgn(z.back()) < 0)
    for (auto& v : z) v = -v;
  return z;
}

Integer ipow(const Integer& x, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

Integer resultant_integer(std::vector<Integer> A, std::vector<Integer> B) {
  long da = static_cast<long>(A.size()) - 1;
  long db = static_cast<long>(B.size()) - 1;
  if (da == 0) return ipow(A[0], static_cast<unsigned long>(db));
  if (db == 0) return ipow(B[0], static_cast<unsigned long>(da));
  Integer ca = vec_content(A), cb = vec_content(B);
  for (auto& v : A) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t());
  for (auto& v : B) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cb.get_mpz_t());
  Integer g(1), h(1), scale = ipow(ca, db) * ipow(cb, da);
  int s = 1;
  if (da < db) {
    std::swap(A, B);
    if ((da & 1) && (db & 1)) s = -s;
  }
  for (;;) {
    const long dA = static_cast<long>(A.size()) - 1;
    const long dB = static_cast<long>(B.size()) - 1;
    const long delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    std::vector<Integer> R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.empty()) return Integer(0);
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& v : R)
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
    B = std::move(R);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.size() == 1) break;
  }
  const long dA = static_cast<long>(A.size()) - 1;
  Integer num = ipow(B[0], static_cast<unsigned long>(dA));
  Integer den = ipow(h, static_cast<unsigned long>(dA - 1));
  Integer hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * scale * hh;
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (sgn(c) == 0) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InvalidArgument("empty polynomial");
  Poly out;
  std::size_t i = 0;
  auto fail = [&]() {
    throw InvalidArgument("malformed polynomial: " + std::string(text));
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) ||
                            s[j] == '/'))
      ++j;
    const bool had_coef = j > i;
    Rational coef(1);
    if (had_coef) coef = parse_rational(s.substr(i, j - i));
    i = j;
    if (had_coef && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 't') fail();
    }
    int deg = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail();
        deg = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (!had_coef) {
      fail();
    }
    out += monomial(sign * coef, deg);
  }
  return out;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

bool Poly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& x) { return x.get_den() == 1; });
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return Poly();
  Poly r(*this);
  if (s == 1) return r;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.degree() == 0) return b.scaled(a.c_[0]);
  if (b.degree() == 0) return a.scaled(b.c_[0]);
  IntForm fa = int_form(a), fb = int_form(b);
  auto z = detail::mul_integer(fa.z, fb.z);
  return from_int_form(std::move(z), fa.den * fb.den);
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += pvitau::to_string(mag);
      continue;
    }
    if (mag != 1) out += pvitau::to_string(mag) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> Poly::coeff_strings() const {
  std::vector<std::string> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(pvitau::to_string(c));
  return v;
}

Poly Poly::from_coeff_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  Poly p(std::move(c));
  if (p.c_.size() != coeffs.size())
    throw InvalidArgument("polynomial with zero leading coefficient");
  return p;
}

Poly pow(const Poly& a, int e) {
  Poly r(1L), base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational inv = Rational(1) / b.leading();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree() - db; i >= 0; --i) {
    Rational c = rem[static_cast<std::size_t>(i + db)] * inv;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.degree() == 0) return a.scaled(Rational(1) / b.leading());
  if (a.degree() < b.degree())
    throw NonExactDivision(a.to_string(), a.degree());
  IntForm fa = int_form(a), fb = int_form(b);
  const std::size_t db = fb.z.size() - 1;
  const Integer& lb = fb.z.back();
  std::vector<Integer>& rem = fa.z;
  std::vector<Integer> q(rem.size() - db);
  bool integral = true;
  Integer r;
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer& top = rem[i + db];
    if (sgn(top) == 0) continue;
    mpz_tdiv_qr(q[i].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (sgn(r) != 0) {
      integral = false;
      break;
    }
    for (std::size_t j = 0; j < db; ++j)
      mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), fb.z[j].get_mpz_t());
    top = 0;
  }
  if (!integral) {
    DivRem dr = divrem(a, b);
    if (!dr.remainder.is_zero())
      throw NonExactDivision(dr.remainder.to_string(), dr.remainder.degree());
    return dr.quotient;
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (sgn(rem[j]) != 0) {
      rem.resize(db);
      Poly remainder = from_int_form(std::move(rem), fa.den);
      throw NonExactDivision(remainder.to_string(), remainder.degree());
    }
  }
  Poly quotient = from_int_form(std::move(q), Integer(1));
  if (fa.den == 1 && fb.den == 1) return quotient;
  return quotient.scaled(make_rational(fb.den, fa.den));
}

Integer denominator_lcm(const Poly& a) {
  Integer l(1);
  for (const auto& c : a.coeffs())
    if (c.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Poly primitive_integer_part(const Poly& a) {
  if (a.is_zero()) return a;
  return from_int_form(primitive_vec(int_form(a).z), Integer(1));
}

bool coprime(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.degree() == 0;
  if (b.is_zero()) return a.degree() == 0;
  if (a.degree() == 0 || b.degree() == 0) return true;
  if (coprime_certified(int_form(a).z, int_form(b).z)) return true;
  return gcd(a, b).degree() == 0;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly(1L);
  std::vector<Integer> A = int_form(a).z, B = int_form(b).z;
  if (coprime_certified(A, B)) return Poly(1L);
  A = primitive_vec(std::move(A));
  B = primitive_vec(std::move(B));
  if (A.size() < B.size()) std::swap(A, B);
  for (;;) {
    std::vector<Integer> R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return Poly(1L);
    A = std::move(B);
    B = primitive_vec(std::move(R));
  }
  return from_int_form(std::move(B), Integer(1)).monic();
}

ContentPrimitive content_primitive(const Poly& a) {
  if (!a.is_integral())
    throw NonIntegralInput("content of a non-integral polynomial: " + a.to_string());
  if (a.is_zero()) return {Integer(0), Poly()};
  std::vector<Integer> z = int_form(a).z;
  Integer g = vec_content(z);
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return {g, from_int_form(std::move(z), Integer(1))};
}

Integer content(const Poly& a) { return content_primitive(a).content; }

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  IntForm fa = int_form(a), fb = int_form(b);
  const unsigned long da = static_cast<unsigned long>(a.degree());
  const unsigned long db = static_cast<unsigned long>(b.degree());
  Integer r = resultant_integer(std::move(fa.z), std::move(fb.z));
  return make_rational(r, ipow(fa.den, db) * ipow(fb.den, da));
}

Rational discriminant(const Poly& a) {
  const int d = a.degree();
  if (d < 1) throw ConstantPolynomial("discriminant of a constant polynomial");
  Rational r = resultant(a, a.derivative()) / a.leading();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace pvitau
