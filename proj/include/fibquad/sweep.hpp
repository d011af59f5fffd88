#pragma once

/**
 * @file sweep.hpp
 * @brief Index-range sweep kernels.
 *
 * A check is a callable `std::optional<std::string>(std::int64_t index)`
 * returning a failure description, or nullopt when the index passes.
 * sweep_serial is the reference; sweep_parallel splits the range over OpenMP
 * threads and must return exactly the same counterexample list (sorted by
 * index). Exceptions thrown by a check become counterexamples in both.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "fibquad/report.hpp"

namespace fibquad {

enum class Exec { serial, parallel };

namespace detail {

template <class Check>
std::optional<Counterexample> run_check(Check& check, std::int64_t index) {
  try {
    if (auto failure = check(index)) return Counterexample{index, std::move(*failure)};
  } catch (const std::exception& e) {
    return Counterexample{index, std::string("exception: ") + e.what()};
  }
  return std::nullopt;
}

}  // namespace detail

template <class Check>
std::vector<Counterexample> sweep_serial(std::int64_t first, std::int64_t last, Check&& check) {
  std::vector<Counterexample> out;
  for (std::int64_t i = first; i <= last; ++i) {
    if (auto cx = detail::run_check(check, i)) out.push_back(std::move(*cx));
  }
  return out;
}

template <class Check>
std::vector<Counterexample> sweep_parallel(std::int64_t first, std::int64_t last, Check&& check) {
  std::vector<Counterexample> out;
  if (last < first) return out;
#pragma omp parallel
  {
    std::vector<Counterexample> local;
    // Dynamic schedule: per-index cost grows with the index (coefficient size).
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = first; i <= last; ++i) {
      if (auto cx = detail::run_check(check, i)) local.push_back(std::move(*cx));
    }
#pragma omp critical(fibquad_sweep_merge)
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  return out;
}

template <class Check>
std::vector<Counterexample> sweep(std::int64_t first, std::int64_t last, Check&& check, Exec exec) {
  return exec == Exec::parallel ? sweep_parallel(first, last, std::forward<Check>(check))
                                : sweep_serial(first, last, std::forward<Check>(check));
}

/// Runs a sweep and packages it as a report, timing the whole call.
template <class Check>
VerificationReport sweep_report(std::string claim_id, std::string range, std::int64_t first,
                                std::int64_t last, Check&& check, Exec exec) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.range = std::move(range);
  r.counterexamples = sweep(first, last, std::forward<Check>(check), exec);
  r.status = r.counterexamples.empty() ? Status::pass : Status::fail;
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fibquad
