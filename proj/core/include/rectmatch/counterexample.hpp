#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rectmatch {

using BigRational = boost::multiprecision::cpp_rational;

struct Estimate {
  double value = 0;
  double stderr_ = 0;
  long trials = 0;
  long hits = 0;
};

// Probability that t x-ordered random points form a strictly monotone
// y-chain with alternating colors: 1 / (t! 2^(t-2)). Exact.
BigRational alt_chain_probability(int t);

// Monte Carlo check of alt_chain_probability on fresh t-point samples.
Estimate estimate_alt_chain_probability(int t, long trials, std::uint64_t seed);

// Probability that the next point extends a monotone alternating chain of
// t-1 points in both position and color: 1 / (2t). Exact.
BigRational conditional_extension_exact(int t);

// Samples directly from the conditional law (sorted uniforms with a coin
// for direction and one of the two alternating colorings), then tests the
// t-th point. Rejection on the joint event would need ~t! 2^(t-2) draws.
Estimate estimate_conditional_extension(int t, long trials, std::uint64_t seed);

struct CounterexampleReport {
  int t = 0;
  BigRational exact_joint;
  BigRational exact_conditional;
  BigRational reported_one_step;  // 1/8, cited constant
  BigRational gap;                // 1/8 - 1/(2t)
  bool conditional_below_one_step = false;
  Estimate empirical_joint;
  Estimate empirical_conditional;
  long trials = 0;
  std::uint64_t seed = 0;
};

// Exact and empirical quantities for the non-Markov gap at time t.
// joint_trials <= 0 skips the joint Monte Carlo (it is infeasible for
// large t anyway).
CounterexampleReport markov_gap_report(int t, long trials, std::uint64_t seed,
                                       long joint_trials = -1);

}  // namespace rectmatch
