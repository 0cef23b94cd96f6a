#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pvitau/backlund.hpp"
#include "pvitau/pvi.hpp"
#include "pvitau/report.hpp"
#include "pvitau/sequence_io.hpp"

namespace pvitau {

// Runs fn(0..count-1) on up to `jobs` threads; results keep index order.
// The first exception thrown by any task is rethrown after all threads join.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int jobs, F fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t width = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int default_jobs();

struct Readings {
  UVReading uv = UVReading::corrected;
  BReading bplus = BReading::corrected;
  CollapseReading collapse = CollapseReading::printed;
  HodeReading hode = HodeReading::printed;
};
// "uv=printed", "bplus=corrected", "collapse=alternative", "hode=printed"
void apply_reading(Readings& r, std::string_view assignment);

struct SuiteOptions {
  std::vector<SeedParams> grid;
  int N = 6;
  PviPerturbation perturb;
  Readings readings;
  int jobs = 1;
};

// (3,2,1), (4,3,1), (5,4,1), (2,1,3), (1,1,1)
std::vector<SeedParams> default_grid();
// "3,2,1;4,3,1"
std::vector<SeedParams> parse_grid(std::string_view text);

// riccati, seed-pvi, collapse, theorem-qn, lemma1, prop1, prop2, hankel,
// polynomiality, h-sigma, example1
const std::vector<std::string>& suite_names();
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt,
                                          SequenceCache& cache);

}  // namespace pvitau
