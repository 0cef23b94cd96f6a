#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvitau/report.hpp"
#include "pvitau/seeds.hpp"
#include "pvitau/sequence_io.hpp"
#include "pvitau/toda.hpp"

namespace pvitau {

// Seed (p, p-1, 1) scaled by 1/p, prime-p schedule; every step integral with
// content 1.
ConjectureReport conj4_check(long p, int N, SequenceCache& cache);

// which = 2: T (3,2,1) with prime:3 and seed W/3, S with square-shift and
// seed W(2,3,0). which = 3: T (4,3,1), example3 schedule, seed W/4.
// which = 4: T (5,4,1), prime:5, seed W/5.
ConjectureReport examples_check(int which, int N, SequenceCache& cache);

// Generic T and S runs with factorial seeds and c = k; Z[r,s,t] membership
// per step, plus the specialization at (r,s) = (3,1).
ConjectureReport conj3_check(int m, int N);

enum class C2Reading { printed, symmetric };
std::string to_string(C2Reading r);
C2Reading parse_c2_reading(std::string_view s);

// Closed-form product for disc(T_n(r,m,s)) up to a constant.
struct DiscriminantModel {
  int n = 2;
  int m = 1;
  C2Reading reading = C2Reading::symmetric;

  // k j^2 - (j^3 + 2j)/3
  static long h(long k, long j);
  // SampleAtFactorZero when a factor with nonzero exponent vanishes.
  Rational evaluate(const Rational& r, const Rational& s) const;
  // Sum of exponents (every factor is linear in r, s).
  long total_degree() const;
  // 3 C(m(n-1), 2)
  long stated_degree() const;
};

// T_n with T_2 = W and c(n) = (n-1)(n+r).
Poly conj2_tau(int n, int m, const Rational& r, const Rational& s);

using Sample = std::pair<Rational, Rational>;
// Fixed generic points; the first `count` are returned.
std::vector<Sample> default_conj2_samples(std::size_t count);

// Along a generic line in (r, s): degree of disc(T_n) by finite differences,
// using up to `max_degree` + 3 points. -1 when the differences do not
// terminate within that window.
long conj2_degree_estimate(int n, int m, long max_degree);

ConjectureReport conj2_check(int n, int m, const std::vector<Sample>& samples,
                             C2Reading reading = C2Reading::symmetric, bool estimate_degree = true);

// Contents per step; pass when every content is 1.
ConjectureReport best_possible_scan(const TauSequence& seq);

// Product form against P_VI and against the tau-route q_n for 1 <= n <= N.
ConjectureReport conj1_check(const SeedParams& p, int N, SequenceCache& cache);

// V-product q_n for both gamma signs.
ConjectureReport prop2_check(int n, const Rational& r, int m);

}  // namespace pvitau
