#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectmatch {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

struct ColoredPoint {
  double x;
  double y;
  Color color;
};

enum class Model { UniformSquare, GridX };

struct GeneralPositionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A colored point set in general position (all x distinct, all y distinct),
// stored in strictly increasing x order. Immutable after construction.
class Instance {
 public:
  // Validates general position and sortedness; throws GeneralPositionViolation.
  explicit Instance(std::vector<ColoredPoint> points,
                    Model model = Model::UniformSquare, std::uint64_t seed = 0,
                    int retries = 0);

  int n() const { return static_cast<int>(points_.size()); }
  const ColoredPoint& point(int i) const { return points_.at(i); }
  const std::vector<ColoredPoint>& points() const { return points_; }
  Model model() const { return model_; }
  std::uint64_t seed() const { return seed_; }
  int retries() const { return retries_; }

 private:
  std::vector<ColoredPoint> points_;
  Model model_;
  std::uint64_t seed_;
  int retries_;
};

// Colors are i.i.d. fair coin flips; UniformSquare draws x,y i.i.d. uniform
// on [0,1], GridX fixes x = (i+1)/n. Deterministic given (n, seed, model);
// coordinate collisions are redrawn from the same stream and counted.
Instance generate_instance(int n, std::uint64_t seed, Model model);

// Closed axis-aligned rectangle; degenerate segments and points permitted.
struct Rect {
  double xmin, xmax, ymin, ymax;

  bool contains(double x, double y) const {
    return xmin <= x && x <= xmax && ymin <= y && y <= ymax;
  }
};

Rect bbox(const ColoredPoint& p, const ColoredPoint& q);

// Closed-set disjointness: boundary contact counts as intersection.
bool rects_disjoint(const Rect& r1, const Rect& r2);

// Indices of points inside the closed rectangle, ascending.
std::vector<int> points_in_rect(const Instance& inst, const Rect& r);

// Unordered index pairs into an Instance; stored with i < j, sorted.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  void add(int i, int j) {
    if (i > j) std::swap(i, j);
    pairs.emplace_back(i, j);
  }
};

inline int matched_count(const Matching& m) {
  return 2 * static_cast<int>(m.pairs.size());
}

struct ValidationReport {
  bool valid = true;
  std::string violation;              // first violated invariant, empty if valid
  std::vector<std::pair<int, int>> offending;
};

// Checks the four matching invariants: disjoint endpoints, equal colors,
// bbox covers exactly the two endpoints, pairwise-disjoint rectangles.
ValidationReport validate_matching(const Instance& inst, const Matching& m);

// Returns a new Instance with y-coordinate i replaced by new_y.
Instance perturb_y(const Instance& inst, int i, double new_y);

// Returns a new Instance with the color of point i flipped.
Instance flip_color(const Instance& inst, int i);

enum class MonotoneMap { Cube, Sqrt, AffineUp };

// Applies the named strictly increasing map to every coordinate; relative
// orders (and hence all matchings) are preserved.
Instance apply_monotone_map(const Instance& inst, MonotoneMap map);

}  // namespace rectmatch
