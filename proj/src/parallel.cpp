#include "lgmf/parallel.hpp"

#include <atomic>
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lgmf {

namespace {
std::atomic<int> g_jobs{0};

int jobs_from_env() {
  const char* env = std::getenv("LGMF_JOBS");
  if (!env) return 1;
  int j = std::atoi(env);
  return j > 0 ? j : 1;
}
}  // namespace

int default_jobs() {
  int j = g_jobs.load();
  if (j == 0) {
    j = jobs_from_env();
    g_jobs.store(j);
  }
  return j;
}

void set_default_jobs(int jobs) { g_jobs.store(jobs > 0 ? jobs : 1); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lgmf
