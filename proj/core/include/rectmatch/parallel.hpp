#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "rectmatch/rng.hpp"

namespace rectmatch {

// Runs `trials` independent trials, each seeded SplitMix64(master ^ index),
// on up to `workers` threads. Results come back in trial-index order, so
// output is independent of the worker count.
template <typename Result, typename Fn>
std::vector<Result> run_trials(long trials, std::uint64_t master_seed,
                               int workers, Fn fn) {
  std::vector<Result> results(trials);
  if (workers <= 1) {
    for (long i = 0; i < trials; ++i) {
      results[i] = fn(i, splitmix64(master_seed ^ static_cast<std::uint64_t>(i)));
    }
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long i = w; i < trials; i += workers) {
        results[i] = fn(i, splitmix64(master_seed ^ static_cast<std::uint64_t>(i)));
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace rectmatch
