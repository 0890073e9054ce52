#include "rectmatch/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace rectmatch {

namespace {

void check_shape(const ChainSpec& c) {
  const int n = c.size();
  if (n == 0 || c.P.cols() != n) throw MalformedMatrix("P must be square and nonempty");
  if (c.f.size() != n || c.p1.size() != n) {
    throw MalformedMatrix("f/p1 dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(c.P(i, j) >= 0.0) || c.P(i, j) > 1.0) {
        throw MalformedMatrix("P entry outside [0,1]");
      }
    }
    if (!(c.f(i) >= 0.0) || !std::isfinite(c.f(i))) {
      throw MalformedMatrix("reward must be finite and nonnegative");
    }
    if (!(c.p1(i) >= 0.0)) throw MalformedMatrix("p1 entry negative");
  }
  if (std::abs(c.p1.sum() - 1.0) > 1e-9) throw MalformedMatrix("p1 must sum to 1");
}

std::vector<std::vector<int>> support_graph(const Eigen::MatrixXd& Q) {
  const int n = static_cast<int>(Q.rows());
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (Q(i, j) > 0.0) out[i].push_back(j);
    }
  }
  return out;
}

bool strongly_connected(const std::vector<std::vector<int>>& g) {
  const int n = static_cast<int>(g.size());
  auto reach_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    return count == n;
  };
  std::vector<std::vector<int>> rev(n);
  for (int v = 0; v < n; ++v) {
    for (int w : g[v]) rev[w].push_back(v);
  }
  return reach_all(g) && reach_all(rev);
}

// Period via BFS levels: gcd over edges (u,v) of level(u) + 1 - level(v).
int graph_period(const std::vector<std::vector<int>>& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> level(n, -1);
  std::queue<int> q;
  q.push(0);
  level[0] = 0;
  int period = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g[v]) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        q.push(w);
      } else {
        period = std::gcd(period, std::abs(level[v] + 1 - level[w]));
      }
    }
  }
  return period == 0 ? 0 : period;
}

}  // namespace

ChainValidation validate_chain(const ChainSpec& c) {
  check_shape(c);
  ChainValidation v;
  v.stochastic = true;
  for (int j = 0; j < c.size(); ++j) {
    if (std::abs(c.P.col(j).sum() - 1.0) > 1e-9) v.stochastic = false;
  }
  const auto g = support_graph(c.Q());
  v.irreducible = strongly_connected(g);
  if (v.irreducible) {
    v.period = graph_period(g);
    v.aperiodic = v.period == 1;
  }
  return v;
}

Eigen::VectorXd stationary(const ChainSpec& c, double tol) {
  const auto valid = validate_chain(c);
  if (!valid.stochastic) throw MalformedMatrix("columns of P must sum to 1");
  if (!valid.irreducible) throw NotIrreducible("support graph not strongly connected");

  const int n = c.size();
  const Eigen::MatrixXd Q = c.Q();

  // s Q = s  <=>  (Q^T - I) s^T = 0; replace one equation by sum(s) = 1.
  Eigen::MatrixXd A = Q.transpose() - Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  A.row(n - 1).setOnes();
  b(n - 1) = 1.0;
  Eigen::VectorXd s = A.colPivHouseholderQr().solve(b);
  s = s.cwiseMax(0.0);
  s /= s.sum();

  // Power-iteration cross-check.
  Eigen::RowVectorXd p = Eigen::RowVectorXd::Constant(n, 1.0 / n);
  const long cap = 1'000'000;
  bool converged = false;
  for (long it = 0; it < cap; ++it) {
    Eigen::RowVectorXd next = p * Q;
    const double step = (next - p).cwiseAbs().maxCoeff();
    p = next;
    if (step <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NoConvergence("power iteration did not converge");
  if ((p.transpose() - s).cwiseAbs().maxCoeff() > std::max(tol * 1e3, 1e-8)) {
    throw NoConvergence("linear solve and power iteration disagree");
  }
  if ((s.transpose() * Q - s.transpose()).cwiseAbs().maxCoeff() > std::max(tol, 1e-12)) {
    throw NoConvergence("stationarity residual above tolerance");
  }
  return s;
}

double alpha(const ChainSpec& c) { return c.f.dot(stationary(c)); }

int convergence_index(const ChainSpec& c, double delta, long cap) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const Eigen::VectorXd s = stationary(c);
  const Eigen::MatrixXd Q = c.Q();
  const int n = c.size();
  Eigen::MatrixXd Qt = Q;
  const Eigen::MatrixXd limit = Eigen::VectorXd::Ones(n) * s.transpose();
  for (long t = 1; t <= cap; ++t) {
    if ((Qt - limit).cwiseAbs().maxCoeff() < delta) return static_cast<int>(t);
    Qt *= Q;
  }
  throw CapExceeded("convergence_index: cap exceeded");
}

double exact_expected_sum(const ChainSpec& c, long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Eigen::MatrixXd Q = c.Q();
  Eigen::RowVectorXd p = c.p1.transpose();
  double total = 0.0;
  for (long t = 1; t <= n; ++t) {
    total += c.f.dot(p.transpose());
    if (t < n) p = p * Q;
  }
  return total;
}

Lemma1Report lemma1_bounds(const ChainSpec& c, double epsilon, long n) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Lemma1Report r;
  r.n = n;
  r.epsilon = epsilon;
  r.m = c.f.maxCoeff();
  if (r.m == 0.0) {
    // All rewards zero: every quantity collapses.
    r.n0 = 1;
    r.exact = exact_expected_sum(c, n);
    return r;
  }
  const int N = c.size();
  r.alpha = alpha(c);
  r.delta = epsilon / (N * r.m);
  r.n0 = convergence_index(c, r.delta);
  r.exact = exact_expected_sum(c, n);
  if (n <= r.n0) {
    r.degenerate = true;
    r.lower = 0.0;
    r.upper = static_cast<double>(n) * r.m;
  } else {
    r.lower = static_cast<double>(n - r.n0) * (r.alpha - epsilon);
    r.upper = static_cast<double>(r.n0) * N * r.m +
              static_cast<double>(n - r.n0) * (r.alpha + epsilon);
  }
  return r;
}

HomogeneityReport empirical_transition_matrix(
    const std::vector<StateTrace>& traces, StepWindow window1,
    StepWindow window2, long min_per_source) {
  constexpr int L = HomogeneityReport::kLabels;
  const StepWindow windows[2] = {window1, window2};
  HomogeneityReport report;
  Eigen::MatrixXd counts[2];
  for (auto& m : counts) m = Eigen::MatrixXd::Zero(L, L);

  for (const auto& trace : traces) {
    const int steps = static_cast<int>(trace.labels.size());
    for (int w = 0; w < 2; ++w) {
      for (int t = std::max(0, windows[w].begin);
           t < std::min(steps - 1, windows[w].end); ++t) {
        const int src = static_cast<int>(trace.labels[t]);
        const int dst = static_cast<int>(trace.labels[t + 1]);
        counts[w](src, dst) += 1.0;
      }
    }
  }

  for (int w = 0; w < 2; ++w) {
    report.freq[w] = Eigen::MatrixXd::Zero(L, L);
    report.stderr_[w] = Eigen::MatrixXd::Zero(L, L);
    for (int src = 0; src < L; ++src) {
      const double total = counts[w].row(src).sum();
      if (total == 0.0) continue;
      if (total < static_cast<double>(min_per_source)) {
        throw InsufficientSamples("window has under-sampled source label " +
                                  std::string(step_label_name(static_cast<StepLabel>(src))));
      }
      for (int dst = 0; dst < L; ++dst) {
        const double p = counts[w](src, dst) / total;
        report.freq[w](src, dst) = p;
        report.stderr_[w](src, dst) = std::sqrt(p * (1.0 - p) / total);
      }
    }
  }

  for (int src = 0; src < L; ++src) {
    // Only sources observed in both windows are comparable.
    if (counts[0].row(src).sum() == 0.0 || counts[1].row(src).sum() == 0.0) continue;
    for (int dst = 0; dst < L; ++dst) {
      const double d = std::abs(report.freq[0](src, dst) - report.freq[1](src, dst));
      if (d > report.max_discrepancy) {
        report.max_discrepancy = d;
        report.argmax_src = src;
        report.argmax_dst = dst;
      }
    }
  }
  return report;
}

}  // namespace rectmatch
