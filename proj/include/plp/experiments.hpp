#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "plp/iwasawa.hpp"

namespace plp {

// Tabular result of one experiment. Cells hold exact values ("num/den" for
// rationals); rows come out in grid order regardless of scheduling.
struct Report {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> ok;  // per row
  std::vector<std::string> notes;
  bool all_ok() const;
};

// Runs fn(0..count-1) on `jobs` threads; results are indexed, so order is fixed.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn);

struct PeriodsGrid {
  std::vector<long> primes{3, 5};
  std::optional<Rational> u;  // default 1 + p for each p
  unsigned n_min = 1;
  unsigned n_max = 3;
  long size_min = 1;
  long size_max = 4;
  long start = 0;  // J = [start, start + size - 1]
  // Explicit J / J' override the size range (J' unset means every subinterval).
  std::optional<Interval> J;
  std::optional<Interval> Jp;
};

// One row per (p, n, J, J'): CRT vs closed form, defining congruences, norm bounds.
Report norm_bounds_report(const PeriodsGrid& g, unsigned jobs = 1);
// One row per (p, n, J) with J' = J: (deg, mu, lambda) of xi~/mlog against the
// conjectured formulas, plus the proven bounds and the unit test when beta~ = 0.
Report periods_invariants_report(const PeriodsGrid& g, unsigned jobs = 1);

// Hodge, Newton and Smith polygons of a module and the Katz-Mazur comparison.
Report polygon_report(const FilteredPhiModule& d);

struct RecursionConfig {
  Tower tower;
  FilteredPhiModule module;
  std::optional<Interval> J;  // default ]t_HT,1, t'_HT,d]
  long N = 0;
  long n_max = 4;
  ZMode mode = ZMode::standard;
};

// Per level: congruence, determinant identity, membership, surjectivity (N >= 1)
// or the vanishing at level N-1 (negative_n).
Report z_recursion_report(const RecursionConfig& c);
// Standard dim-2 module with a_p = 0 unless given; diagonal and pair products.
Report pollack_report(const RecursionConfig& c);
// Per level: det divisibility and the elementary divisors against the xi~ products.
Report divisor_report(const RecursionConfig& c);
// Per level log-norms, then the estimate and the brackets.
Report slope_report(const RecursionConfig& c, const Rational& candidate);

struct Dim3Config {
  Tower tower;
  std::vector<Rational> alphas;
  QMatrix P;
  std::vector<long> weights;
  std::optional<Interval> J;  // default ]t_HT,1, t_HT,d]
  long N = 0;
  long n_max = 4;
};
// Refinement recursion (triangular shape, diagonal, scalar recursions, column
// divisibility) and the lambda-degree bound. Works for dimension 2 as well.
Report refinement_report(const Dim3Config& c);

template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace plp
