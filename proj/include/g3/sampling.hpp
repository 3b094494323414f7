#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace g3 {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool contains(double t, double slack = 1e-12) const { return t >= lo - slack && t <= hi + slack; }
};

/// n evenly spaced points including both ends (n >= 2), or the midpoint when n == 1.
std::vector<double> linspace(const Interval& range, std::size_t n);

/// Worker count from G3_THREADS (0 or unset = hardware concurrency).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Exceptions
/// from any worker are rethrown on the caller (the lowest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

struct Spread {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;

  double width() const { return max - min; }
};

Spread spread_of(const std::vector<double>& values);

}  // namespace g3
