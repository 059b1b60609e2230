#include "tau/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace tau {

nlohmann::json to_json(const Report& report, bool timing) {
  nlohmann::json j;
  j["id"] = report.id;
  j["params"] = report.params;
  j["lhs"] = to_string(report.lhs);
  j["rhs"] = to_string(report.rhs);
  j["pass"] = report.pass;
  j["ms"] = timing ? report.ms : 0.0;
  if (!report.detail.is_null()) j["detail"] = report.detail;
  return j;
}

std::size_t count_passed(const std::vector<Report>& reports) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.pass; }));
}

std::string render_sweep(const std::vector<Report>& reports, bool timing) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : reports) array.push_back(to_json(r, timing));
  std::ostringstream os;
  os << array.dump(2) << '\n' << "PASS " << count_passed(reports) << '/' << reports.size() << '\n';
  return os.str();
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Report> run_parallel(std::size_t count, int jobs, const std::function<Report(std::size_t)>& task) {
  std::vector<Report> out(count);
  parallel_for(count, jobs, [&](std::size_t i) { out[i] = task(i); });
  return out;
}

}  // namespace tau
