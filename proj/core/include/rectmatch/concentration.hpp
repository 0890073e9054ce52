#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rectmatch/solvers.hpp"

namespace rectmatch {

struct EmptyProfile : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded-difference constants for M(n)/n as a function of the 2n inputs
// (y_1..y_n, c_1..c_n): 4/n per position, 2/n per color. Sum of squares
// is 20/n.
std::vector<double> difference_profile(int n);

// exp(-2 eps^2 / sum d_i^2), doubled when two-sided; clamped to the
// trivial probability bound.
double mcdiarmid_bound(const std::vector<double>& d, double epsilon,
                       bool two_sided);

struct BoundedDiffReport {
  int n = 0;
  long trials = 0;
  int perturbations_per_trial = 0;
  int max_position_delta = 0;  // |delta M| over vertical moves
  int max_color_delta = 0;     // |delta M| over color flips
  std::map<int, long> position_histogram;
  std::map<int, long> color_histogram;
};

// Perturb-and-resolve experiment behind the 4/n and 2/n constants: every
// observed |delta M| must stay within 4 (position) and 2 (color).
BoundedDiffReport bounded_difference_check(int n, long trials,
                                           int perturbations_per_trial,
                                           std::uint64_t seed,
                                           const SolveLimits& limits = {},
                                           int workers = 1);

enum class SolverChoice { Exact, Greedy };

struct MeanEstimate {
  double mean = 0;     // of M(n)/n
  double stderr_ = 0;
  long trials = 0;
  long discarded = 0;  // budget-exceeded trials
};

MeanEstimate empirical_expectation(int n, long trials, std::uint64_t seed,
                                   SolverChoice solver,
                                   const SolveLimits& limits = {},
                                   int workers = 1);

struct SuperadditivityResult {
  bool holds = false;
  int m_full = 0;
  int m_left = 0;
  int m_right = 0;
};

// M(S) >= M(first k points by x) + M(remaining n-k); exact solves on all
// three point sets.
SuperadditivityResult superadditivity_check(const Instance& inst, int k,
                                            const SolveLimits& limits = {});

struct FeketeRow {
  int n = 0;
  double mean = 0;  // estimate of E[M(n)]/n
  double stderr_ = 0;
  double sup_so_far = 0;
};

struct FeketePairMargin {
  int n = 0;
  int m = 0;
  // E^[M(n+m)] - E^[M(n)] - E^[M(m)] in matched points, with combined
  // standard error; superadditivity predicts margin >= -4 sigma.
  double margin = 0;
  double combined_stderr = 0;
  bool within_tolerance = false;
};

struct FeketeReport {
  std::vector<FeketeRow> rows;
  std::vector<FeketePairMargin> margins;  // all (n,m) with n+m also in ns
};

FeketeReport fekete_report(const std::vector<int>& ns, long trials,
                           std::uint64_t seed, const SolveLimits& limits = {},
                           int workers = 1);

// Appendix partial-sum bound (n0 - 1) + 2 r^n0 / (1 - r), r = exp(-eps^2/40).
double borel_cantelli_tail(double epsilon, int n0);

struct TailReport {
  int n = 0;
  double epsilon = 0;
  long trials = 0;
  double pilot_mean = 0;  // independent pilot estimate of E[M(n)/n]
  long pilot_trials = 0;
  double frequency = 0;   // empirical Pr(|M/n - pilot_mean| >= eps)
  double frequency_stderr = 0;
  double bound = 0;       // 2 exp(-eps^2 n / 10)
  bool vacuous = false;   // bound >= 1
  bool pass = false;      // frequency <= bound + 4 stderr (or vacuous)
};

TailReport tail_vs_bound(int n, double epsilon, long trials,
                         std::uint64_t seed, const SolveLimits& limits = {},
                         int workers = 1);

}  // namespace rectmatch
