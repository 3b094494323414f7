#include "g3/sampling.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "g3/error.hpp"

namespace g3 {

std::vector<double> linspace(const Interval& range, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {0.5 * (range.lo + range.hi)};
  std::vector<double> out(n);
  const double step = range.width() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = range.lo + step * static_cast<double>(i);
  out.back() = range.hi;
  return out;
}

unsigned worker_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("G3_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      n = 0;
    }
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return std::max(1u, n);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      // contiguous blocks keep the failing index deterministic
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          body(i);
        } catch (...) {
          errors[w] = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t w = 0; w < workers; ++w)
    if (errors[w]) std::rethrow_exception(errors[w]);
}

Spread spread_of(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::Precondition, "no samples");
  Spread s{values.front(), values.front(), 0.0};
  // deviations from the first sample keep the mean exact for near-constant data
  double sum = 0.0;
  for (double v : values) {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    sum += v - values.front();
  }
  s.mean = values.front() + sum / static_cast<double>(values.size());
  return s;
}

}  // namespace g3
