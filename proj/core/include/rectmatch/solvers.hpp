#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rectmatch/geometry.hpp"

namespace rectmatch {

// Same-color pair whose bounding box covers no third point of the
// instance; the only pairs eligible for any matching.
struct CandidatePair {
  int i, j;
  Rect rect;
};

struct SolveLimits {
  long max_nodes = 50'000'000;
  double time_budget_s = 120.0;
};

struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All candidate pairs, lexicographic by (i, j).
std::vector<CandidatePair> candidate_pairs(const Instance& inst);

// True iff the pairs share an endpoint or their rectangles intersect.
bool conflict(const CandidatePair& a, const CandidatePair& b);

struct SolveResult {
  Matching matching;
  bool optimal = true;
  long nodes_explored = 0;
};

// Maximum-cardinality conflict-free subset of candidate_pairs via
// branch-and-bound on the conflict graph. Ties broken to the
// lexicographically smallest optimal pair set. When limits are exhausted
// the best incumbent is returned with optimal = false.
SolveResult solve_exact(const Instance& inst, const SolveLimits& limits = {});

// Exhaustive enumeration over subsets of candidate pairs; test oracle.
// Throws InstanceTooLarge for n > 10.
Matching solve_bruteforce(const Instance& inst);

enum class StepLabel : std::uint8_t {
  Init1,
  MonoAlt2,
  MonoAlt3,
  MatchEmitted,
  Other,
};

const char* step_label_name(StepLabel label);

// Per-step label sequence of the sweep, with matched-point increments.
struct StateTrace {
  std::vector<StepLabel> labels;
  std::vector<int> increments;
};

struct GreedyResult {
  Matching matching;
  StateTrace trace;
};

// Deterministic left-to-right sweep: each point is matched with the most
// recently buffered same-color point whose box covers exactly the two of
// them and avoids every emitted rectangle, otherwise buffered.
GreedyResult solve_greedy_sweep(const Instance& inst);

}  // namespace rectmatch
