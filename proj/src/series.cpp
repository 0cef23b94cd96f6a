#include "pvitau/series.hpp"

#include <algorithm>

#include "pvitau/errors.hpp"

namespace pvitau {

Series::Series(std::vector<Rational> coeffs, int prec) : c_(std::move(coeffs)), prec_(prec) {
  if (prec < 0) throw InvalidArgument("series precision must be >= 0");
  trim();
}

Series Series::variable(const Rational& c0, int prec) {
  return Series({c0, Rational(1)}, prec);
}

void Series::trim() {
  if (prec_ != kExact && static_cast<int>(c_.size()) > prec_) c_.resize(static_cast<std::size_t>(prec_));
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Series::coeff(int i) const {
  if (i >= prec_) throw InvalidArgument("series coefficient " + std::to_string(i) + " beyond precision");
  return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational Series::derivative_at(int k) const { return coeff(k) * Rational(factorial(k)); }

Series Series::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Series(std::move(d), prec_ == kExact ? kExact : std::max(prec_ - 1, 0));
}

Series Series::integral(const Rational& c0) const {
  std::vector<Rational> d{c0};
  for (std::size_t i = 0; i < c_.size(); ++i) d.push_back(c_[i] / static_cast<long>(i + 1));
  return Series(std::move(d), prec_ == kExact ? kExact : prec_ + 1);
}

Series operator+(const Series& a, const Series& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Series(std::move(c), std::min(a.prec_, b.prec_));
}

Series Series::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return Series(std::move(c), prec_);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const int prec = std::min(a.prec_, b.prec_);
  if (a.c_.empty() || b.c_.empty()) return Series(std::vector<Rational>{}, prec);
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (prec != Series::kExact) n = std::min(n, static_cast<std::size_t>(prec));
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < a.c_.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Series(std::move(c), prec);
}

Series operator/(const Series& a, const Series& b) {
  if (b.c_.empty() || sgn(b.c_[0]) == 0) throw PoleEvaluation("series division by a series vanishing at 0");
  const int prec = std::min(a.prec_, b.prec_);
  if (prec == Series::kExact) {
    if (b.c_.size() != 1) throw InvalidArgument("exact series quotient is not a polynomial");
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x /= b.c_[0];
    return Series(std::move(c), prec);
  }
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  const Rational inv = 1 / b.c_[0];
  for (int i = 0; i < prec; ++i) {
    Rational acc = i < static_cast<int>(a.c_.size()) ? a.c_[static_cast<std::size_t>(i)] : Rational(0);
    for (int j = 1; j <= i && j < static_cast<int>(b.c_.size()); ++j)
      acc -= b.c_[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    c[static_cast<std::size_t>(i)] = acc * inv;
  }
  return Series(std::move(c), prec);
}

bool Series::agrees_with(const Series& o) const { return (*this - o).is_zero_to_prec(); }

bool Series::is_zero_to_prec() const { return c_.empty(); }

std::string Series::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += pvitau::to_string(c_[i]);
    if (i > 0) s += "*e^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  if (prec_ != kExact) s += " + O(e^" + std::to_string(prec_) + ")";
  return s;
}

}  // namespace pvitau
