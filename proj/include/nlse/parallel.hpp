#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace nlse {

// Worker count for study fan-out; SOLITON_LAB_WORKERS overrides the hardware
// default.
inline int worker_count() {
  if (const char* env = std::getenv("SOLITON_LAB_WORKERS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Apply fn to every item, at most worker_count() tasks in flight; results are
// collected in input order, so aggregation does not depend on completion
// order. Exceptions propagate from the offending item.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& items, F&& fn)
    -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  std::vector<Out> results;
  results.reserve(items.size());
  const size_t workers = static_cast<size_t>(worker_count());
  if (workers <= 1 || items.size() <= 1) {
    for (const In& item : items) results.push_back(fn(item));
    return results;
  }
  for (size_t base = 0; base < items.size(); base += workers) {
    const size_t count = std::min(workers, items.size() - base);
    std::vector<std::future<Out>> wave;
    wave.reserve(count);
    for (size_t i = 0; i < count; ++i)
      wave.push_back(std::async(std::launch::async, fn, std::cref(items[base + i])));
    for (auto& f : wave) results.push_back(f.get());
  }
  return results;
}

}  // namespace nlse
