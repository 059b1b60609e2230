#pragma once

// Verification reports and the parallel sweep driver.

#include "tau/exact.hpp"

#include <json.hpp>

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tau {

struct Report {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  Rational lhs;
  Rational rhs;
  bool pass = false;
  double ms = 0.0;
  /// Free-form notes; emitted only when non-empty.
  nlohmann::json detail;

  /// Sets pass from exact equality of lhs and rhs.
  void settle() { pass = (lhs == rhs); }
};

/// {id, params, lhs, rhs, pass, ms[, detail]}; ms is 0 when timing is off.
nlohmann::json to_json(const Report& report, bool timing = true);

/// Pretty JSON array followed by a newline and "PASS k/N".
std::string render_sweep(const std::vector<Report>& reports, bool timing = true);

std::size_t count_passed(const std::vector<Report>& reports);

/// Runs task(i) for i in [0, count) on up to `jobs` threads; jobs <= 0 means
/// hardware concurrency. The first exception thrown by any task is rethrown
/// after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

/// parallel_for collecting one report per index, in index order.
std::vector<Report> run_parallel(std::size_t count, int jobs, const std::function<Report(std::size_t)>& task);

/// Times fn() and stores the elapsed milliseconds in report.ms.
template <typename Fn>
void timed(Report& report, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace tau
