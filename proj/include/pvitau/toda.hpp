#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvitau/param_poly.hpp"
#include "pvitau/poly.hpp"
#include "pvitau/seeds.hpp"

namespace pvitau {

enum class Family { T, S };
std::string to_string(Family f);
Family parse_family(std::string_view s);

// introduction: k = (n-1)(n+r) for T, (n-1)(n+r-1) for S.
// okamoto: k from the chart constant (b1+b3+n)(b3+b4+n) minus the
// correction coming from the t, t-1 prefactors of the tau ansatz.
enum class TodaForm { introduction, okamoto };
std::string to_string(TodaForm f);
TodaForm parse_toda_form(std::string_view s);

struct CnSchedule {
  enum class Kind { unit, prime, example3, square_shift, toda_k, table };
  Kind kind = Kind::unit;
  long p = 0;
  std::map<int, Rational> table;

  static CnSchedule unit() { return {}; }
  static CnSchedule prime(long p);
  static CnSchedule example3() { return {Kind::example3, 0, {}}; }
  static CnSchedule square_shift() { return {Kind::square_shift, 0, {}}; }
  static CnSchedule toda_k() { return {Kind::toda_k, 0, {}}; }
  static CnSchedule explicit_table(std::map<int, Rational> values);
  // "unit", "prime:P", "example3", "square-shift", "toda-k", "table:2=5,3=7/2"
  static CnSchedule parse(std::string_view text);
  std::string name() const;
};

struct NormalizationStrategy {
  enum class Kind { raw, schedule, auto_primitive };
  Kind kind = Kind::raw;
  CnSchedule schedule;

  static NormalizationStrategy raw() { return {}; }
  static NormalizationStrategy with(CnSchedule s) { return {Kind::schedule, std::move(s)}; }
  static NormalizationStrategy auto_primitive() { return {Kind::auto_primitive, {}}; }
  // "raw", "auto-primitive", or a schedule name
  static NormalizationStrategy parse(std::string_view text);
  std::string name() const;
};

Rational k_coefficient(Family f, int n, const Rational& r);
Rational k_coefficient_okamoto(Family f, int n, const SeedParams& p);
ParamScalar k_coefficient_generic(Family f, int n);

// r is the T-chart r of the sequence; square-shift reads (n+r-1)^2.
Rational cn_value(const CnSchedule& sched, int n, Family f, const Rational& r);

// (t^2-t)(T T'' - T'^2) + (2t-1) T T' + k T^2
Poly toda_rhs(const Poly& T, const Rational& k);
ParamPoly toda_rhs(const ParamPoly& T, const ParamScalar& k);
// exact_div(toda_rhs(cur, k), c*prev)
Poly toda_step(const Poly& prev, const Poly& cur, const Rational& k, const Rational& c);
ParamPoly toda_step(const ParamPoly& prev, const ParamPoly& cur, const ParamScalar& k,
                    const ParamScalar& c);
// c*next*prev - toda_rhs(cur, k)
Poly bilinear_residual(const Poly& prev, const Poly& cur, const Poly& next,
                       const Rational& k, const Rational& c);

struct Anomaly {
  int n = 0;
  std::string kind;  // non-exact-division | degree-violation | non-integral
  std::string detail;
  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

struct GenerateOptions {
  Rational seed_scale{1};
  bool expect_integral = false;
  TodaForm form = TodaForm::introduction;
};

struct TauSequence {
  Family family = Family::T;
  SeedParams params;
  NormalizationStrategy strategy;
  GenerateOptions options;
  int requested_n = 0;
  std::vector<Poly> polys;                      // polys[i] is index i+1
  std::vector<std::optional<Integer>> contents;  // parallel to polys
  std::vector<Anomaly> anomalies;

  int size() const { return static_cast<int>(polys.size()); }
  const Poly& at(int n) const;  // 1-based; SequenceTooShort
  std::optional<Integer> content_at(int n) const;
  int expected_degree(int n) const;
  TauSequence truncated(int n) const;
};

Poly family_seed(Family f, const SeedParams& p);

TauSequence generate_sequence(Family f, const SeedParams& p, int N,
                              const NormalizationStrategy& strategy,
                              const GenerateOptions& options = {});

// (n, content) for n >= 2 with integral entries.
std::vector<std::pair<int, Integer>> content_trace(const TauSequence& seq);

// Generic run over Q(r,s): seeds m!W(r,m,s) and (m+1)!W(r-1,m+1,s-1) when
// factorial_seed is set, c(n) = k(n).
struct GenericSequence {
  Family family = Family::T;
  int m = 1;
  std::vector<ParamPoly> polys;  // polys[i] is index i+1
  std::vector<Anomaly> anomalies;
};
GenericSequence generate_generic(Family f, int m, int N, bool factorial_seed = true);

}  // namespace pvitau
