#ifndef MORITA_PARALLEL_HPP_
#define MORITA_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace morita {

/// Worker count used by parallel_map; 1 means run inline.
std::size_t default_jobs() noexcept;
void set_default_jobs(std::size_t jobs) noexcept;

/// Evaluates fn(i) for i in [0, n) on up to `jobs` threads and returns the
/// results in index order. The first exception thrown is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn, std::size_t jobs = default_jobs())
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(n);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace morita

#endif  // MORITA_PARALLEL_HPP_
