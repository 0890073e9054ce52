#include "rectmatch/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "rectmatch/parallel.hpp"
#include "rectmatch/rng.hpp"

namespace rectmatch {

std::vector<double> difference_profile(int n) {
  if (n < 1) throw std::invalid_argument("difference_profile: n must be >= 1");
  std::vector<double> d(2 * n);
  const double nn = static_cast<double>(n);
  std::fill(d.begin(), d.begin() + n, 4.0 / nn);
  std::fill(d.begin() + n, d.end(), 2.0 / nn);
  return d;
}

double mcdiarmid_bound(const std::vector<double>& d, double epsilon,
                       bool two_sided) {
  if (d.empty()) throw EmptyProfile("mcdiarmid_bound: empty difference profile");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  double sumsq = 0.0;
  for (double di : d) {
    if (!(di > 0.0)) throw std::invalid_argument("difference constants must be positive");
    sumsq += di * di;
  }
  const double bound = std::exp(-2.0 * epsilon * epsilon / sumsq);
  if (two_sided) return std::min(2.0 * bound, 2.0);
  return std::min(bound, 1.0);
}

namespace {

int exact_size(const Instance& inst, const SolveLimits& limits) {
  const auto result = solve_exact(inst, limits);
  if (!result.optimal) throw BudgetExceeded("exact solve hit its budget");
  return matched_count(result.matching);
}

double fresh_y(const Instance& inst, Xoshiro256StarStar& rng) {
  for (;;) {
    const double y = rng.uniform01();
    bool clash = false;
    for (const auto& p : inst.points()) clash = clash || p.y == y;
    if (!clash) return y;
  }
}

}  // namespace

BoundedDiffReport bounded_difference_check(int n, long trials,
                                           int perturbations_per_trial,
                                           std::uint64_t seed,
                                           const SolveLimits& limits,
                                           int workers) {
  BoundedDiffReport report;
  report.n = n;
  report.trials = trials;
  report.perturbations_per_trial = perturbations_per_trial;

  struct TrialDeltas {
    std::vector<int> position;
    std::vector<int> color;
  };
  auto trial = [&](long, std::uint64_t trial_seed) {
    TrialDeltas deltas;
    Xoshiro256StarStar rng(splitmix64(trial_seed ^ 0xabcdULL));
    const Instance inst = generate_instance(n, trial_seed, Model::UniformSquare);
    const int base = exact_size(inst, limits);
    for (int p = 0; p < perturbations_per_trial; ++p) {
      const int i = static_cast<int>(rng.below(n));
      const Instance moved = perturb_y(inst, i, fresh_y(inst, rng));
      deltas.position.push_back(std::abs(exact_size(moved, limits) - base));
    }
    for (int p = 0; p < perturbations_per_trial; ++p) {
      const int i = static_cast<int>(rng.below(n));
      const Instance flipped = flip_color(inst, i);
      deltas.color.push_back(std::abs(exact_size(flipped, limits) - base));
    }
    return deltas;
  };

  const auto all = run_trials<TrialDeltas>(trials, seed, workers, trial);
  for (const auto& deltas : all) {
    for (int d : deltas.position) {
      report.position_histogram[d] += 1;
      report.max_position_delta = std::max(report.max_position_delta, d);
    }
    for (int d : deltas.color) {
      report.color_histogram[d] += 1;
      report.max_color_delta = std::max(report.max_color_delta, d);
    }
  }
  return report;
}

MeanEstimate empirical_expectation(int n, long trials, std::uint64_t seed,
                                   SolverChoice solver,
                                   const SolveLimits& limits, int workers) {
  auto trial = [&](long, std::uint64_t trial_seed) -> double {
    const Instance inst = generate_instance(n, trial_seed, Model::UniformSquare);
    if (solver == SolverChoice::Greedy) {
      return static_cast<double>(matched_count(solve_greedy_sweep(inst).matching)) / n;
    }
    const auto result = solve_exact(inst, limits);
    if (!result.optimal) return -1.0;  // discarded
    return static_cast<double>(matched_count(result.matching)) / n;
  };

  const auto values = run_trials<double>(trials, seed, workers, trial);
  MeanEstimate est;
  double sum = 0.0, sumsq = 0.0;
  for (double v : values) {
    if (v < 0.0) {
      ++est.discarded;
      continue;
    }
    ++est.trials;
    sum += v;
    sumsq += v * v;
  }
  if (est.trials > 0) {
    est.mean = sum / est.trials;
    const double var =
        est.trials > 1
            ? (sumsq - sum * sum / est.trials) / (est.trials - 1)
            : 0.0;
    est.stderr_ = std::sqrt(std::max(var, 0.0) / est.trials);
  }
  return est;
}

SuperadditivityResult superadditivity_check(const Instance& inst, int k,
                                            const SolveLimits& limits) {
  if (k < 1 || k >= inst.n()) throw std::invalid_argument("split index out of range");
  std::vector<ColoredPoint> left(inst.points().begin(), inst.points().begin() + k);
  std::vector<ColoredPoint> right(inst.points().begin() + k, inst.points().end());
  const Instance left_inst(std::move(left), inst.model(), inst.seed());
  const Instance right_inst(std::move(right), inst.model(), inst.seed());
  SuperadditivityResult r;
  r.m_full = exact_size(inst, limits);
  r.m_left = exact_size(left_inst, limits);
  r.m_right = exact_size(right_inst, limits);
  r.holds = r.m_full >= r.m_left + r.m_right;
  return r;
}

FeketeReport fekete_report(const std::vector<int>& ns, long trials,
                           std::uint64_t seed, const SolveLimits& limits,
                           int workers) {
  FeketeReport report;
  std::map<int, MeanEstimate> by_n;
  double sup = 0.0;
  for (std::size_t idx = 0; idx < ns.size(); ++idx) {
    const int n = ns[idx];
    const auto est = empirical_expectation(
        n, trials, splitmix64(seed ^ (0x100ULL + idx)), SolverChoice::Exact,
        limits, workers);
    by_n[n] = est;
    sup = std::max(sup, est.mean);
    report.rows.push_back(FeketeRow{n, est.mean, est.stderr_, sup});
  }
  for (const auto& [n, en] : by_n) {
    for (const auto& [m, em] : by_n) {
      if (m < n) continue;
      const auto sum_it = by_n.find(n + m);
      if (sum_it == by_n.end()) continue;
      const auto& esum = sum_it->second;
      FeketePairMargin margin;
      margin.n = n;
      margin.m = m;
      // Compare in matched points: E[M(n+m)] vs E[M(n)] + E[M(m)].
      margin.margin =
          esum.mean * (n + m) - en.mean * n - em.mean * m;
      margin.combined_stderr = std::sqrt(
          std::pow(esum.stderr_ * (n + m), 2) + std::pow(en.stderr_ * n, 2) +
          std::pow(em.stderr_ * m, 2));
      margin.within_tolerance = margin.margin >= -4.0 * margin.combined_stderr;
      report.margins.push_back(margin);
    }
  }
  return report;
}

double borel_cantelli_tail(double epsilon, int n0) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (n0 < 1) throw std::invalid_argument("n0 must be >= 1");
  const double r = std::exp(-epsilon * epsilon / 40.0);
  return (n0 - 1) + 2.0 * std::pow(r, n0) / (1.0 - r);
}

TailReport tail_vs_bound(int n, double epsilon, long trials,
                         std::uint64_t seed, const SolveLimits& limits,
                         int workers) {
  TailReport report;
  report.n = n;
  report.epsilon = epsilon;
  report.trials = trials;
  report.bound = std::min(2.0 * std::exp(-epsilon * epsilon * n / 10.0), 2.0);
  report.vacuous = report.bound >= 1.0;

  // The true mean is unknown; an independent pilot sample stands in.
  report.pilot_trials = 10 * trials;
  const auto pilot = empirical_expectation(
      n, report.pilot_trials, splitmix64(seed ^ 0x70696c6fULL),
      SolverChoice::Exact, limits, workers);
  report.pilot_mean = pilot.mean;

  auto trial = [&](long, std::uint64_t trial_seed) -> char {
    const Instance inst = generate_instance(n, trial_seed, Model::UniformSquare);
    const double fraction =
        static_cast<double>(exact_size(inst, limits)) / n;
    return std::abs(fraction - report.pilot_mean) >= epsilon ? 1 : 0;
  };
  const auto outcomes = run_trials<char>(trials, seed, workers, trial);
  long hits = 0;
  for (char c : outcomes) hits += c;
  report.frequency = static_cast<double>(hits) / trials;
  report.frequency_stderr =
      std::sqrt(report.frequency * (1.0 - report.frequency) / trials);
  report.pass = report.vacuous ||
                report.frequency <= report.bound + 4.0 * report.frequency_stderr;
  return report;
}

}  // namespace rectmatch
