#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pvitau/errors.hpp"
#include "pvitau/sequence_io.hpp"
#include "pvitau/toda.hpp"

using namespace pvitau;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

const SeedParams p321{Rational(3), 2, Rational(1)};

// Oracle: expand the bilinear form through coefficient convolution.
Poly rhs_oracle(const Poly& T, const Rational& k) {
  const Poly t = Poly::t(), one(1L);
  Poly d1 = T.derivative(), d2 = d1.derivative();
  Poly u = t * t - t;
  Poly a = T * d2, b = d1 * d1, c = T * d1, d = T * T;
  return u * a - u * b + (t.scaled(Rational(2)) - one) * c + d.scaled(k);
}

std::string slurp(const std::filesystem::path& f) {
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("Toda right-hand side") {
  CHECK(toda_rhs(Poly(1L), Rational(7)) == Poly(7L));
  CHECK(toda_rhs(P("5t^2-5t+1"), Rational(5)) == P("175t^4-350t^3+255t^2-80t+10"));
  CHECK(toda_rhs(P("15t^2-15t+3"), Rational(5)) == P("1575t^4-3150t^3+2295t^2-720t+90"));
  for (const char* s : {"t^5-3t+2", "7/3t^3-t^2", "-2t^6+t^4-9"})
    for (long k : {-3L, 0L, 4L}) CHECK(toda_rhs(P(s), Rational(k)) == rhs_oracle(P(s), Rational(k)));
}

TEST_CASE("Toda step") {
  CHECK(toda_step(Poly(1L), P("5t^2-5t+1"), Rational(5), Rational(5)) ==
        P("35t^4-70t^3+51t^2-16t+2"));
  CHECK(toda_step(Poly(1L), Poly(1L), make_rational(11, 3), Rational(1)) == Poly(make_rational(11, 3)));
  CHECK_THROWS_AS(toda_step(Poly::t(), Poly(1L), Rational(1), Rational(1)), NonExactDivision);
  CHECK_THROWS_AS(toda_step(Poly(1L), Poly(1L), Rational(1), Rational(0)), InvalidArgument);
}

TEST_CASE("k coefficients") {
  CHECK(k_coefficient(Family::T, 2, Rational(3)) == 5);
  CHECK(k_coefficient(Family::S, 2, Rational(3)) == 4);
  CHECK(k_coefficient_generic(Family::T, 2) == ParamScalar::r() + ParamScalar(2L));
  CHECK(k_coefficient_okamoto(Family::T, 2, p321) == 5);
  CHECK(k_coefficient_okamoto(Family::S, 2, p321) == 4);
  CHECK_THROWS_AS(k_coefficient(Family::T, 1, Rational(3)), InvalidArgument);
}

TEST_CASE("normalization schedules") {
  CHECK(cn_value(CnSchedule::prime(3), 2, Family::T, Rational(3)) == 5);
  CHECK(cn_value(CnSchedule::prime(3), 4, Family::T, Rational(3)) == 315);
  CHECK(cn_value(CnSchedule::prime(5), 6, Family::T, Rational(5)) == 2475);
  CHECK(cn_value(CnSchedule::example3(), 2, Family::T, Rational(4)) == 3);
  CHECK(cn_value(CnSchedule::example3(), 5, Family::T, Rational(4)) == 16 * 7 * 9);
  CHECK(cn_value(CnSchedule::example3(), 3, Family::T, Rational(4)) == 4 * 5 * 7);
  CHECK(cn_value(CnSchedule::square_shift(), 2, Family::S, Rational(3)) == 16);
  CHECK(cn_value(CnSchedule::parse("table:2=5,3=7/2"), 3, Family::T, Rational(0)) == make_rational(7, 2));
  for (const char* s : {"unit", "prime:7", "example3", "square-shift", "toda-k", "table:2=5,3=7/2"})
    CHECK(CnSchedule::parse(s).name() == s);
  CHECK(NormalizationStrategy::parse("auto-primitive").name() == "auto-primitive");
  CHECK_THROWS_AS(CnSchedule::parse("prime:x"), InvalidArgument);
  CHECK_THROWS_AS(CnSchedule::parse("table:2=0"), InvalidArgument);
  CHECK_THROWS_AS(cn_value(CnSchedule::parse("table:2=1"), 3, Family::T, Rational(0)), InvalidArgument);
}

TEST_CASE("sequence generation examples") {
  auto seq = generate_sequence(Family::T, p321, 3, NormalizationStrategy::with(CnSchedule::prime(3)),
                               {Rational(1, 3)});
  REQUIRE(seq.size() == 3);
  CHECK(seq.at(1) == Poly(1L));
  CHECK(seq.at(2) == P("5t^2-5t+1"));
  CHECK(seq.at(3) == P("35t^4-70t^3+51t^2-16t+2"));
  CHECK(!seq.content_at(1));
  CHECK(*seq.content_at(2) == 1);
  CHECK(*seq.content_at(3) == 1);
  CHECK(seq.anomalies.empty());
  CHECK_THROWS_AS(seq.at(4), SequenceTooShort);

  auto two = generate_sequence(Family::T, p321, 2, NormalizationStrategy::raw());
  CHECK(two.size() == 2);
  CHECK(two.at(2) == P("15t^2-15t+3"));

  auto s = generate_sequence(Family::S, p321, 2, NormalizationStrategy::with(CnSchedule::square_shift()));
  CHECK(s.at(2) == P("20t^3-30t^2+12t-1"));

  auto raw = generate_sequence(Family::T, p321, 3, NormalizationStrategy::raw());
  auto trace = content_trace(raw);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].second == 3);
  CHECK(trace[1].second == 45);
  CHECK(raw.at(3) == P("35t^4-70t^3+51t^2-16t+2").scaled(Rational(45)));
}

TEST_CASE("scheduled run agrees with auto-primitive run") {
  auto sched = generate_sequence(Family::T, p321, 9, NormalizationStrategy::with(CnSchedule::prime(3)),
                                 {Rational(1, 3), true});
  auto prim = generate_sequence(Family::T, p321, 9, NormalizationStrategy::auto_primitive());
  REQUIRE(sched.size() == 9);
  REQUIRE(prim.size() == 9);
  CHECK(sched.anomalies.empty());
  for (int n = 2; n <= 9; ++n) {
    CHECK(*sched.content_at(n) == 1);
    CHECK(sched.at(n) == prim.at(n));
  }
}

TEST_CASE("bilinear consistency, degree law and coprimality") {
  const SeedParams params[] = {p321, {Rational(5), 4, Rational(1)}, {make_rational(7, 2), 3, make_rational(-2, 3)},
                               {Rational(4), 1, Rational(2)}};
  for (const auto& p : params)
    for (Family f : {Family::T, Family::S}) {
      auto seq = generate_sequence(f, p, 7, NormalizationStrategy::with(CnSchedule::toda_k()));
      REQUIRE(seq.size() == 7);
      CHECK(seq.anomalies.empty());
      for (int n = 2; n < 7; ++n) {
        Rational k = k_coefficient(f, n, p.r), c = cn_value(CnSchedule::toda_k(), n, f, p.r);
        CHECK(bilinear_residual(seq.at(n - 1), seq.at(n), seq.at(n + 1), k, c).is_zero());
      }
      for (int n = 1; n <= 7; ++n) CHECK(seq.at(n).degree() == seq.expected_degree(n));
      for (int n = 1; n < 7; ++n) CHECK(coprime(seq.at(n), seq.at(n + 1)));
    }
}

TEST_CASE("scaling equivariance") {
  const Rational lambda = make_rational(-5, 7);
  auto a = generate_sequence(Family::T, p321, 6, NormalizationStrategy::raw());
  auto b = generate_sequence(Family::T, p321, 6, NormalizationStrategy::raw(), {lambda});
  for (int n = 1; n <= 6; ++n) CHECK(b.at(n) == a.at(n).scaled(pow(lambda, n - 1)));
}

TEST_CASE("the two Toda forms agree") {
  const SeedParams params[] = {p321, {Rational(5), 4, Rational(1)}, {make_rational(1, 3), 2, make_rational(5, 2)}};
  for (const auto& p : params)
    for (Family f : {Family::T, Family::S}) {
      for (int n = 2; n < 8; ++n) CHECK(k_coefficient(f, n, p.r) == k_coefficient_okamoto(f, n, p));
      auto a = generate_sequence(f, p, 6, NormalizationStrategy::raw());
      auto b = generate_sequence(f, p, 6, NormalizationStrategy::raw(), {Rational(1), false, TodaForm::okamoto});
      CHECK(a.polys == b.polys);
    }
}

TEST_CASE("anomalies are recorded, not thrown") {
  auto seq = generate_sequence(Family::T, p321, 5, NormalizationStrategy::with(CnSchedule::prime(3)));
  bool non_integral = false;
  for (const auto& a : seq.anomalies) non_integral |= a.kind == "non-integral";
  CHECK(!non_integral);  // expect_integral not requested
  auto flagged = generate_sequence(Family::T, p321, 5, NormalizationStrategy::with(CnSchedule::prime(7)),
                                   {Rational(1), true});
  bool found = false;
  for (const auto& a : flagged.anomalies) found |= a.kind == "non-integral";
  CHECK(found);
  CHECK_THROWS_AS(generate_sequence(Family::T, p321, 1, NormalizationStrategy::raw()), InvalidArgument);
}

TEST_CASE("sequence documents round trip byte for byte") {
  auto seq = generate_sequence(Family::S, {make_rational(7, 2), 3, make_rational(-2, 3)}, 6,
                               NormalizationStrategy::with(CnSchedule::prime(5)));
  std::string doc = write_sequence_document(seq);
  TauSequence back = read_sequence_document(doc);
  CHECK(back.polys == seq.polys);
  CHECK(back.contents == seq.contents);
  CHECK(back.anomalies == seq.anomalies);
  CHECK(write_sequence_document(back) == doc);
  CHECK_THROWS_AS(read_sequence_document("{\"schema_version\": 1}"), InvalidArgument);
  CHECK_THROWS_AS(read_sequence_document("not json"), InvalidArgument);
}

TEST_CASE("sequence cache persists and reuses") {
  auto dir = std::filesystem::temp_directory_path() / "pvitau_cache_test";
  std::filesystem::remove_all(dir);
  SequenceCache cache(dir);
  auto strat = NormalizationStrategy::with(CnSchedule::prime(3));
  auto a = cache.get(Family::T, p321, 6, strat, {Rational(1, 3)});
  auto b = cache.get(Family::T, p321, 4, strat, {Rational(1, 3)});
  CHECK(a == b);
  CHECK(cache.memory_entries() == 1);
  auto file = cache.file_for(sequence_key(*a));
  REQUIRE(std::filesystem::exists(file));
  const std::string bytes = slurp(file);

  SequenceCache fresh(dir);
  auto c = fresh.get(Family::T, p321, 6, strat, {Rational(1, 3)});
  CHECK(c->polys == a->polys);
  CHECK(slurp(file) == bytes);
  auto longer = fresh.get(Family::T, p321, 8, strat, {Rational(1, 3)});
  CHECK(longer->size() == 8);
  for (int n = 1; n <= 6; ++n) CHECK(longer->at(n) == a->at(n));
  std::filesystem::remove_all(dir);
}
