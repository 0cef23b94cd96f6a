#include <CLI11.hpp>
#include <chrono>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pvitau/conjectures.hpp"
#include "pvitau/errors.hpp"
#include "pvitau/suites.hpp"

using namespace pvitau;

namespace {

struct Global {
  std::string out;
  std::string cache_dir;
  int jobs = default_jobs();
  bool timing = false;
  std::vector<std::string> readings;
};

struct SeqArgs {
  std::string family = "T";
  std::string r = "3", s = "1";
  int m = 2;
  int N = 10;
  std::string schedule;
  std::string strategy;
  std::string seed_scale = "auto";
  bool expect_integral = false;
  std::string toda_form = "introduction";
};

void add_seq_options(CLI::App* cmd, SeqArgs& a) {
  cmd->add_option("--family", a.family, "T or S")->capture_default_str();
  cmd->add_option("-r", a.r, "parameter r (rational)")->capture_default_str();
  cmd->add_option("-m", a.m, "parameter m")->capture_default_str()->check(CLI::NonNegativeNumber);
  cmd->add_option("-s", a.s, "parameter s (rational)")->capture_default_str();
  cmd->add_option("-N", a.N, "last index")->capture_default_str()->check(CLI::Range(2, 100000));
  cmd->add_option("--schedule", a.schedule, "unit, prime:P, example3, square-shift, toda-k, table:2=5,...");
  cmd->add_option("--strategy", a.strategy, "raw, auto-primitive, or a schedule name");
  cmd->add_option("--seed-scale", a.seed_scale,
                  "rational factor on the seed; auto = 1/P for prime:P, 1/4 for example3, else 1")
      ->capture_default_str();
  cmd->add_flag("--expect-integral", a.expect_integral, "report non-integral steps as anomalies");
  cmd->add_option("--toda-form", a.toda_form, "introduction or okamoto")->capture_default_str();
}

struct ResolvedSeq {
  Family family;
  SeedParams params;
  NormalizationStrategy strategy;
  GenerateOptions options;
  int N;
};

ResolvedSeq resolve(const SeqArgs& a) {
  ResolvedSeq r;
  r.family = parse_family(a.family);
  r.params = {parse_rational(a.r), a.m, parse_rational(a.s)};
  if (!a.schedule.empty() && !a.strategy.empty()) throw InvalidArgument("give --schedule or --strategy, not both");
  if (!a.strategy.empty())
    r.strategy = NormalizationStrategy::parse(a.strategy);
  else if (!a.schedule.empty())
    r.strategy = NormalizationStrategy::with(CnSchedule::parse(a.schedule));
  else
    r.strategy = NormalizationStrategy::raw();
  if (a.seed_scale == "auto") {
    r.options.seed_scale = Rational(1);
    if (r.strategy.kind == NormalizationStrategy::Kind::schedule) {
      if (r.strategy.schedule.kind == CnSchedule::Kind::prime)
        r.options.seed_scale = make_rational(1, r.strategy.schedule.p);
      else if (r.strategy.schedule.kind == CnSchedule::Kind::example3)
        r.options.seed_scale = make_rational(1, 4);
    }
  } else {
    r.options.seed_scale = parse_rational(a.seed_scale);
  }
  r.options.expect_integral = a.expect_integral;
  r.options.form = parse_toda_form(a.toda_form);
  r.N = a.N;
  return r;
}

std::filesystem::path cache_dir(const Global& g) {
  if (!g.cache_dir.empty()) return g.cache_dir;
  return cache_dir_from_env(".pvitau-cache");
}

void emit(const Global& g, const std::string& doc) {
  if (g.out.empty() || g.out == "-") {
    std::cout << doc;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + g.out);
  f << doc;
}

struct ReadingChoice {
  Readings readings;
  C2Reading c2 = C2Reading::symmetric;
};

ReadingChoice readings_from(const Global& g) {
  ReadingChoice rc;
  for (const auto& item : g.readings) {
    if (item.rfind("c2=", 0) == 0)
      rc.c2 = parse_c2_reading(item.substr(3));
    else
      apply_reading(rc.readings, item);
  }
  return rc;
}

int cmd_seq(const Global& g, const SeqArgs& a, bool print) {
  ResolvedSeq rs = resolve(a);
  SequenceCache cache(cache_dir(g));
  auto seq = cache.get(rs.family, rs.params, rs.N, rs.strategy, rs.options);
  const std::string name = to_string(rs.family);
  std::cout << name << rs.params.to_string() << " strategy " << rs.strategy.name() << ", seed scale "
            << to_string(rs.options.seed_scale) << "\n";
  for (int n = 1; n <= seq->size(); ++n) {
    auto c = seq->content_at(n);
    std::cout << name << "_" << n << ": degree " << seq->at(n).degree() << ", content "
              << (c ? c->get_str() : std::string("non-integral"));
    if (print) std::cout << ", " << seq->at(n).to_string();
    std::cout << "\n";
  }
  for (const auto& an : seq->anomalies) std::cout << "anomaly at n=" << an.n << ": " << an.kind << " " << an.detail << "\n";
  if (!g.out.empty()) emit(g, write_sequence_document(*seq));
  return 0;
}

int cmd_verify(const Global& g, std::vector<std::string> suites, const std::string& grid, const std::string& r,
               int m, const std::string& s, int N, const std::string& perturb) {
  SuiteOptions opt;
  opt.N = N;
  opt.jobs = g.jobs;
  opt.readings = readings_from(g).readings;
  if (!perturb.empty()) opt.perturb = PviPerturbation::parse(perturb);
  const bool single = !r.empty() || m > 0 || !s.empty();
  if (single && !grid.empty()) throw InvalidArgument("give -r/-m/-s or --grid, not both");
  if (single) {
    if (r.empty() || m < 1 || s.empty()) throw InvalidArgument("-r, -m and -s go together");
    opt.grid = {{parse_rational(r), m, parse_rational(s)}};
  } else {
    opt.grid = grid.empty() ? default_grid() : parse_grid(grid);
  }
  if (suites.empty()) suites = suite_names();
  for (const auto& name : suites)
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw InvalidArgument("unknown suite '" + name + "'");
  SequenceCache cache(cache_dir(g));
  std::vector<VerificationReport> all;
  for (const auto& name : suites) {
    auto reps = run_suite(name, opt, cache);
    all.insert(all.end(), reps.begin(), reps.end());
  }
  emit(g, verification_document(all, g.timing));
  int flagged = 0, bad = 0;
  for (const auto& rep : all) {
    if (rep.status == ResidualStatus::flagged) ++flagged;
    if (rep.status == ResidualStatus::nonzero) ++bad;
  }
  std::cerr << all.size() << " checks, " << bad << " nonzero, " << flagged << " flagged\n";
  return exit_code(all);
}

int finish_conjecture(const Global& g, const std::vector<ConjectureReport>& reps) {
  emit(g, conjecture_document(reps, g.timing));
  int flagged = 0;
  for (const auto& r : reps)
    if (r.verdict == Verdict::flagged) ++flagged;
  int code = exit_code(reps);
  if (code == 0 && flagged > 0) std::cerr << "notice: " << flagged << " report(s) flagged\n";
  return code;
}

std::vector<Sample> parse_samples(const std::vector<std::string>& items) {
  std::vector<Sample> out;
  for (const auto& it : items) {
    auto c = it.find(',');
    if (c == std::string::npos) throw InvalidArgument("sample '" + it + "' must be r,s");
    out.emplace_back(parse_rational(it.substr(0, c)), parse_rational(it.substr(c + 1)));
  }
  return out;
}

int cmd_bench(const Global& g, const SeqArgs& a) {
  ResolvedSeq rs = resolve(a);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "bench";
  doc["family"] = to_string(rs.family);
  doc["params"] = {{"r", to_string(rs.params.r)}, {"m", rs.params.m}, {"s", to_string(rs.params.s)}};
  doc["strategy"] = rs.strategy.name();
  doc["seed_scale"] = to_string(rs.options.seed_scale);
  Json pts = Json::array();
  for (int n = 2; n <= rs.N; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    TauSequence seq = generate_sequence(rs.family, rs.params, n, rs.strategy, rs.options);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (seq.size() < n) break;
    std::size_t bits = 0;
    for (const auto& c : seq.at(n).coeffs()) {
      bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
      bits = std::max(bits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
    }
    std::ostringstream msf;
    msf.precision(3);
    msf << std::fixed << ms;
    pts.push_back({{"n", n}, {"degree", seq.at(n).degree()}, {"max_bits", bits}, {"elapsed_ms", msf.str()}});
  }
  doc["points"] = std::move(pts);
  emit(g, doc.dump(1) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tau-function polynomials, rational P_VI solutions and their checks"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--out", g.out, "write the document here instead of stdout");
  app.add_option("--cache-dir", g.cache_dir, "sequence cache (default $PVITAU_CACHE_DIR or .pvitau-cache)");
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "include elapsed_ms in reports");
  app.add_option("--flag-reading", g.readings,
                 "uv=printed|corrected, bplus=printed|corrected, collapse=printed|alternative, "
                 "hode=printed|alternative, c2=printed|symmetric");

  SeqArgs seq_args;
  bool print = false;
  auto* seq = app.add_subcommand("seq", "generate a T or S sequence");
  add_seq_options(seq, seq_args);
  seq->add_flag("--print", print, "print every polynomial");

  std::vector<std::string> suites;
  std::string grid, vr, vs, perturb;
  int vm = 0, vN = 6;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "suite name(s); default all");
  verify->add_option("--grid", grid, "r,m,s;r,m,s;...");
  verify->add_option("-r", vr);
  verify->add_option("-m", vm)->check(CLI::PositiveNumber);
  verify->add_option("-s", vs);
  verify->add_option("-N", vN, "largest n")->capture_default_str()->check(CLI::Range(1, 1000));
  verify->add_option("--perturb", perturb, "e.g. alpha=+1 or gamma=-1/2,delta=1");

  auto* conj = app.add_subcommand("conjecture", "integrality, best-possible and discriminant experiments");
  conj->require_subcommand(1);
  std::vector<long> primes{3, 5, 7, 11};
  int c4N = 20;
  auto* c4 = conj->add_subcommand("c4", "prime-p schedule on W(p,p-1,1)/p");
  c4->add_option("-p", primes, "prime(s) >= 3")->capture_default_str();
  c4->add_option("-N", c4N)->capture_default_str()->check(CLI::Range(2, 100000));

  int c2n = 3, c2m = 2, c2count = 4;
  std::vector<std::string> c2samples;
  bool no_degree = false;
  auto* c2 = conj->add_subcommand("c2", "discriminant factorization by sampling");
  c2->add_option("-n", c2n)->capture_default_str()->check(CLI::Range(2, 50));
  c2->add_option("-m", c2m)->capture_default_str()->check(CLI::Range(1, 50));
  c2->add_option("--samples", c2count, "number of built-in generic samples")->capture_default_str();
  c2->add_option("--sample", c2samples, "explicit r,s sample(s)");
  c2->add_flag("--no-degree", no_degree, "skip the finite-difference degree estimate");

  int c3m = 2, c3N = 4;
  auto* c3 = conj->add_subcommand("c3", "Z[r,s,t] integrality of the generic run");
  c3->add_option("-m", c3m)->capture_default_str()->check(CLI::Range(1, 3));
  c3->add_option("-N", c3N)->capture_default_str()->check(CLI::Range(2, 5));

  std::vector<int> which{2, 3, 4};
  int exN = 10;
  auto* ex = conj->add_subcommand("examples", "printed schedules for the (3,2,1), (4,3,1), (5,4,1) runs");
  ex->add_option("--which", which, "2, 3, 4")->capture_default_str();
  ex->add_option("-N", exN)->capture_default_str()->check(CLI::Range(2, 100000));

  SeqArgs best_args;
  auto* best = conj->add_subcommand("best", "contents per step of one run");
  add_seq_options(best, best_args);

  std::string c1r = "3", c1s = "1";
  int c1m = 2, c1N = 3;
  auto* c1 = conj->add_subcommand("c1", "product form of q_n");
  c1->add_option("-r", c1r)->capture_default_str();
  c1->add_option("-m", c1m)->capture_default_str()->check(CLI::PositiveNumber);
  c1->add_option("-s", c1s)->capture_default_str();
  c1->add_option("-N", c1N)->capture_default_str()->check(CLI::Range(1, 1000));

  int p2n = 2, p2m = 1;
  std::string p2r = "2";
  auto* p2 = conj->add_subcommand("p2", "V-product solutions at s = r + 2");
  p2->add_option("-n", p2n)->capture_default_str()->check(CLI::PositiveNumber);
  p2->add_option("-r", p2r)->capture_default_str();
  p2->add_option("-m", p2m)->capture_default_str()->check(CLI::PositiveNumber);

  SeqArgs bench_args;
  bench_args.family = "T";
  bench_args.r = "11";
  bench_args.m = 10;
  bench_args.N = 20;
  bench_args.schedule = "prime:11";
  auto* bench = app.add_subcommand("bench", "time a run and record coefficient sizes per n");
  add_seq_options(bench, bench_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*seq) return cmd_seq(g, seq_args, print);
    if (*verify) return cmd_verify(g, suites, grid, vr, vm, vs, vN, perturb);
    if (*bench) return cmd_bench(g, bench_args);
    SequenceCache cache(cache_dir(g));
    ReadingChoice rc = readings_from(g);
    std::vector<ConjectureReport> reps;
    if (*c4) {
      reps = parallel_map<ConjectureReport>(primes.size(), g.jobs,
                                            [&](std::size_t i) { return conj4_check(primes[i], c4N, cache); });
    } else if (*c2) {
      std::vector<Sample> samples =
          c2samples.empty() ? default_conj2_samples(static_cast<std::size_t>(c2count)) : parse_samples(c2samples);
      reps.push_back(conj2_check(c2n, c2m, samples, rc.c2, !no_degree));
    } else if (*c3) {
      reps.push_back(conj3_check(c3m, c3N));
    } else if (*ex) {
      reps = parallel_map<ConjectureReport>(which.size(), g.jobs,
                                            [&](std::size_t i) { return examples_check(which[i], exN, cache); });
    } else if (*best) {
      ResolvedSeq rs = resolve(best_args);
      reps.push_back(best_possible_scan(*cache.get(rs.family, rs.params, rs.N, rs.strategy, rs.options)));
    } else if (*c1) {
      reps.push_back(conj1_check({parse_rational(c1r), c1m, parse_rational(c1s)}, c1N, cache));
    } else if (*p2) {
      reps.push_back(prop2_check(p2n, parse_rational(p2r), p2m));
    }
    return finish_conjecture(g, reps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
