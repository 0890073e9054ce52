#include "rectmatch/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace rectmatch {

std::vector<CandidatePair> candidate_pairs(const Instance& inst) {
  std::vector<CandidatePair> out;
  const int n = inst.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (inst.point(i).color != inst.point(j).color) continue;
      const Rect r = bbox(inst.point(i), inst.point(j));
      // Points are x-sorted, so only indices strictly between i and j can
      // fall inside the box.
      bool empty = true;
      for (int k = i + 1; k < j && empty; ++k) {
        const auto& p = inst.point(k);
        if (r.contains(p.x, p.y)) empty = false;
      }
      if (empty) out.push_back(CandidatePair{i, j, r});
    }
  }
  return out;
}

bool conflict(const CandidatePair& a, const CandidatePair& b) {
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return true;
  return !rects_disjoint(a.rect, b.rect);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const std::vector<CandidatePair>& pairs;
  std::vector<std::vector<char>> adj;
  long nodes = 0;
  long max_nodes;
  Clock::time_point deadline;
  bool aborted = false;

  int best_size = 0;
  std::vector<int> incumbent;
  std::vector<int> stack;

  Search(const std::vector<CandidatePair>& p, const SolveLimits& limits)
      : pairs(p), max_nodes(limits.max_nodes) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(limits.time_budget_s));
    const int m = static_cast<int>(p.size());
    adj.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (conflict(p[a], p[b])) adj[a][b] = adj[b][a] = 1;
      }
    }
  }

  bool budget_ok() {
    if (aborted) return false;
    if (++nodes > max_nodes || (nodes % 4096 == 0 && Clock::now() > deadline)) {
      aborted = true;
      return false;
    }
    return true;
  }

  // Phase 1: optimum size via branch-and-bound, branching on the
  // highest-degree remaining vertex.
  void find_optimum(std::vector<char>& rem, int rem_count) {
    if (!budget_ok()) return;
    const int cur = static_cast<int>(stack.size());
    if (cur > best_size) {
      best_size = cur;
      incumbent = stack;
    }
    if (rem_count == 0 || cur + rem_count <= best_size) return;

    const int m = static_cast<int>(pairs.size());
    int pick = -1, pick_deg = -1;
    for (int v = 0; v < m; ++v) {
      if (!rem[v]) continue;
      int deg = 0;
      for (int w = 0; w < m; ++w) deg += rem[w] && adj[v][w];
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }

    std::vector<int> removed;
    rem[pick] = 0;
    removed.push_back(pick);
    for (int w = 0; w < m; ++w) {
      if (rem[w] && adj[pick][w]) {
        rem[w] = 0;
        removed.push_back(w);
      }
    }
    stack.push_back(pick);
    find_optimum(rem, rem_count - static_cast<int>(removed.size()));
    stack.pop_back();
    for (int w : removed) rem[w] = 1;

    rem[pick] = 0;
    find_optimum(rem, rem_count - 1);
    rem[pick] = 1;
  }

  // Phase 2: lexicographically smallest set of the known optimum size.
  // Include-first depth-first search in index order; the first solution
  // reached is the lex-min optimum.
  bool find_lex_min(int idx, std::vector<char>& rem, int target,
                    std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == target) return true;
    if (!budget_ok()) return false;
    const int m = static_cast<int>(pairs.size());
    int avail = 0;
    for (int v = idx; v < m; ++v) avail += rem[v];
    if (static_cast<int>(chosen.size()) + avail < target) return false;

    for (int v = idx; v < m; ++v) {
      if (!rem[v]) continue;
      std::vector<int> removed;
      rem[v] = 0;
      for (int w = v + 1; w < m; ++w) {
        if (rem[w] && adj[v][w]) {
          rem[w] = 0;
          removed.push_back(w);
        }
      }
      chosen.push_back(v);
      if (find_lex_min(v + 1, rem, target, chosen)) return true;
      chosen.pop_back();
      for (int w : removed) rem[w] = 1;
      rem[v] = 1;
      // v excluded: its slot cannot help later branches either.
      avail -= 1;
      if (static_cast<int>(chosen.size()) + avail < target) return false;
    }
    return false;
  }
};

}  // namespace

SolveResult solve_exact(const Instance& inst, const SolveLimits& limits) {
  const auto pairs = candidate_pairs(inst);
  const int m = static_cast<int>(pairs.size());
  SolveResult result;
  if (m == 0) return result;

  Search search(pairs, limits);
  std::vector<char> rem(m, 1);
  search.find_optimum(rem, m);

  std::vector<int> chosen;
  if (!search.aborted) {
    std::fill(rem.begin(), rem.end(), 1);
    std::vector<int> lex;
    if (search.find_lex_min(0, rem, search.best_size, lex)) chosen = lex;
  }
  if (chosen.empty() && search.best_size > 0) chosen = search.incumbent;

  std::sort(chosen.begin(), chosen.end());
  for (int v : chosen) result.matching.add(pairs[v].i, pairs[v].j);
  result.optimal = !search.aborted;
  result.nodes_explored = search.nodes;
  return result;
}

namespace {

struct BruteForce {
  const std::vector<CandidatePair>& pairs;
  const std::vector<std::vector<char>>& adj;
  std::vector<int> chosen;
  std::vector<int> best;

  void run(int idx) {
    const int m = static_cast<int>(pairs.size());
    if (idx == m) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    bool compatible = true;
    for (int v : chosen) {
      if (adj[v][idx]) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      chosen.push_back(idx);
      run(idx + 1);
      chosen.pop_back();
    }
    run(idx + 1);
  }
};

}  // namespace

Matching solve_bruteforce(const Instance& inst) {
  if (inst.n() > 10) {
    throw InstanceTooLarge("solve_bruteforce: n > 10");
  }
  const auto pairs = candidate_pairs(inst);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (conflict(pairs[a], pairs[b])) adj[a][b] = adj[b][a] = 1;
    }
  }
  BruteForce bf{pairs, adj, {}, {}};
  bf.run(0);
  Matching out;
  for (int v : bf.best) out.add(pairs[v].i, pairs[v].j);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

const char* step_label_name(StepLabel label) {
  switch (label) {
    case StepLabel::Init1: return "INIT1";
    case StepLabel::MonoAlt2: return "MONO_ALT_2";
    case StepLabel::MonoAlt3: return "MONO_ALT_3";
    case StepLabel::MatchEmitted: return "MATCH_EMITTED";
    case StepLabel::Other: return "OTHER";
  }
  return "?";
}

GreedyResult solve_greedy_sweep(const Instance& inst) {
  GreedyResult result;
  const int n = inst.n();
  std::vector<int> buffer;  // unmatched processed points, in x order
  std::vector<Rect> emitted;

  auto box_clean = [&](int q, int t) {
    const Rect r = bbox(inst.point(q), inst.point(t));
    for (int k = q + 1; k < t; ++k) {
      const auto& p = inst.point(k);
      if (r.contains(p.x, p.y)) return false;
    }
    for (const Rect& e : emitted) {
      if (!rects_disjoint(r, e)) return false;
    }
    return true;
  };

  for (int t = 0; t < n; ++t) {
    int match = -1;
    for (int b = static_cast<int>(buffer.size()) - 1; b >= 0; --b) {
      const int q = buffer[b];
      if (inst.point(q).color != inst.point(t).color) continue;
      if (box_clean(q, t)) {
        match = b;
        break;
      }
    }
    if (match >= 0) {
      const int q = buffer[match];
      result.matching.add(q, t);
      emitted.push_back(bbox(inst.point(q), inst.point(t)));
      buffer.erase(buffer.begin() + match);
      result.trace.labels.push_back(StepLabel::MatchEmitted);
      result.trace.increments.push_back(2);
      continue;
    }

    buffer.push_back(t);
    StepLabel label = StepLabel::Other;
    if (t == 0) {
      label = StepLabel::Init1;
    } else {
      const auto sz = buffer.size();
      const bool last2_consecutive =
          sz >= 2 && buffer[sz - 2] == t - 1 && buffer[sz - 1] == t;
      const bool last3_consecutive =
          sz >= 3 && buffer[sz - 3] == t - 2 && last2_consecutive;
      auto y = [&](int i) { return inst.point(i).y; };
      auto c = [&](int i) { return inst.point(i).color; };
      if (last3_consecutive && c(t - 2) != c(t - 1) && c(t - 1) != c(t) &&
          ((y(t - 2) < y(t - 1) && y(t - 1) < y(t)) ||
           (y(t - 2) > y(t - 1) && y(t - 1) > y(t)))) {
        label = StepLabel::MonoAlt3;
      } else if (last2_consecutive && c(t - 1) != c(t)) {
        label = StepLabel::MonoAlt2;
      }
    }
    result.trace.labels.push_back(label);
    result.trace.increments.push_back(0);
  }
  return result;
}

}  // namespace rectmatch
