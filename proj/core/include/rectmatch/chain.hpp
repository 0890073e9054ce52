#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectmatch/solvers.hpp"

namespace rectmatch {

struct MalformedMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIrreducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-state process with time-independent one-step transition
// probabilities. P is stored column-stochastic: P(i,j) = Pr(X_t = e_i |
// X_{t-1} = e_j). All iteration happens on the row-stochastic Q = P^T.
struct ChainSpec {
  std::vector<std::string> labels;
  Eigen::MatrixXd P;   // column-stochastic
  Eigen::VectorXd f;   // nonnegative rewards
  Eigen::VectorXd p1;  // initial distribution

  int size() const { return static_cast<int>(P.rows()); }
  Eigen::MatrixXd Q() const { return P.transpose(); }
};

struct ChainValidation {
  bool stochastic = false;
  bool irreducible = false;
  bool aperiodic = false;
  int period = 0;

  bool ok() const { return stochastic && irreducible && aperiodic; }
};

// Column sums, support-graph strong connectivity, and the gcd-of-cycle-
// lengths aperiodicity test. Throws MalformedMatrix on shape/negativity.
ChainValidation validate_chain(const ChainSpec& c);

// Stationary distribution: s = sQ, sum 1. Direct linear solve, verified
// against power iteration to the given tolerance.
Eigen::VectorXd stationary(const ChainSpec& c, double tol = 1e-12);

// Stationary expected reward f . s.
double alpha(const ChainSpec& c);

// Smallest t <= cap with max_{i,j} |Q^t(i,j) - s(j)| < delta.
int convergence_index(const ChainSpec& c, double delta, long cap = 1'000'000);

struct Lemma1Report {
  double alpha = 0;
  double m = 0;      // max reward
  double delta = 0;  // epsilon / (N m)
  int n0 = 0;
  double lower = 0;
  double upper = 0;
  double exact = 0;
  long n = 0;
  double epsilon = 0;
  bool degenerate = false;  // n <= n0, bounds vacuous
};

// Expectation sandwich for the accumulated reward sum:
//   lower = (n - n0)(alpha - epsilon),
//   upper = n0 N m + (n - n0)(alpha + epsilon).
Lemma1Report lemma1_bounds(const ChainSpec& c, double epsilon, long n);

// E[f(X_1) + ... + f(X_n)] by iterating p_t = p_{t-1} Q.
double exact_expected_sum(const ChainSpec& c, long n);

struct HomogeneityReport {
  static constexpr int kLabels = 5;
  // freq[w](src, dst): transition frequencies in window w.
  Eigen::MatrixXd freq[2];
  Eigen::MatrixXd stderr_[2];
  double max_discrepancy = 0;
  int argmax_src = -1;
  int argmax_dst = -1;
};

struct StepWindow {
  int begin;  // first step index (0-based) of a transition's source
  int end;    // one past the last
};

// Empirical per-window transition frequencies over StateTrace labels, and
// the max cross-window discrepancy. Requires >= min_per_source transitions
// for every observed source label in each window.
HomogeneityReport empirical_transition_matrix(
    const std::vector<StateTrace>& traces, StepWindow window1,
    StepWindow window2, long min_per_source = 1000);

}  // namespace rectmatch
