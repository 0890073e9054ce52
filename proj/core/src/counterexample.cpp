#include "rectmatch/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rectmatch/rng.hpp"

namespace rectmatch {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int t) {
  BigInt out = 1;
  for (int k = 2; k <= t; ++k) out *= k;
  return out;
}

Estimate finish(long hits, long trials) {
  Estimate e;
  e.trials = trials;
  e.hits = hits;
  e.value = static_cast<double>(hits) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
  return e;
}

}  // namespace

BigRational alt_chain_probability(int t) {
  if (t < 2) throw std::invalid_argument("alt_chain_probability: t must be >= 2");
  // (2 / t!) for the monotone order times 1 / 2^(t-1) for the coloring.
  return BigRational(1, factorial(t) * (BigInt(1) << (t - 2)));
}

Estimate estimate_alt_chain_probability(int t, long trials, std::uint64_t seed) {
  if (t < 2 || trials < 1) throw std::invalid_argument("bad t/trials");
  Xoshiro256StarStar rng(seed);
  std::vector<double> y(t);
  std::vector<bool> color(t);
  long hits = 0;
  for (long trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < t; ++i) {
      y[i] = rng.uniform01();
      color[i] = rng.coin();
    }
    bool inc = true, dec = true, alt = true;
    for (int i = 1; i < t; ++i) {
      inc = inc && y[i - 1] < y[i];
      dec = dec && y[i - 1] > y[i];
      alt = alt && color[i - 1] != color[i];
    }
    if ((inc || dec) && alt) ++hits;
  }
  return finish(hits, trials);
}

BigRational conditional_extension_exact(int t) {
  if (t < 3) throw std::invalid_argument("conditional_extension_exact: t must be >= 3");
  return BigRational(1, 2 * t);
}

Estimate estimate_conditional_extension(int t, long trials, std::uint64_t seed) {
  if (t < 3 || trials < 1) throw std::invalid_argument("bad t/trials");
  Xoshiro256StarStar rng(seed);
  std::vector<double> chain(t - 1);
  long hits = 0;
  for (long trial = 0; trial < trials; ++trial) {
    // Conditioned on the monotone event, the t-1 chain y-values are sorted
    // i.i.d. uniforms; the direction is a fair coin.
    for (auto& v : chain) v = rng.uniform01();
    std::sort(chain.begin(), chain.end());
    const bool increasing = rng.coin();
    // One of the two alternating colorings, chosen by a fair coin; only the
    // last color matters for the extension test.
    const bool first_color = rng.coin();
    const bool last_color = (t % 2 == 0) ? !first_color : first_color;

    const double new_y = rng.uniform01();
    const bool new_color = rng.coin();
    const bool extends_pos =
        increasing ? new_y > chain.back() : new_y < chain.front();
    if (extends_pos && new_color != last_color) ++hits;
  }
  return finish(hits, trials);
}

CounterexampleReport markov_gap_report(int t, long trials, std::uint64_t seed,
                                       long joint_trials) {
  if (t < 3) throw std::invalid_argument("markov_gap_report: t must be >= 3");
  CounterexampleReport report;
  report.t = t;
  report.trials = trials;
  report.seed = seed;
  report.exact_joint = alt_chain_probability(t);
  report.exact_conditional = conditional_extension_exact(t);
  report.reported_one_step = BigRational(1, 8);
  report.gap = report.reported_one_step - report.exact_conditional;
  report.conditional_below_one_step =
      report.exact_conditional < report.reported_one_step;
  if (trials > 0) {
    report.empirical_conditional =
        estimate_conditional_extension(t, trials, splitmix64(seed ^ 0x1ULL));
    const long jt = joint_trials < 0 ? trials : joint_trials;
    if (jt > 0) {
      report.empirical_joint =
          estimate_alt_chain_probability(t, jt, splitmix64(seed ^ 0x2ULL));
    }
  }
  return report;
}

}  // namespace rectmatch
