#include "rectmatch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rectmatch/rng.hpp"

namespace rectmatch {

namespace {

void check_general_position(const std::vector<ColoredPoint>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x)) {
      throw GeneralPositionViolation("points not strictly increasing in x");
    }
  }
  std::set<double> ys;
  for (const auto& p : pts) {
    if (!ys.insert(p.y).second) {
      throw GeneralPositionViolation("duplicate y coordinate");
    }
  }
  for (const auto& p : pts) {
    if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0) {
      throw GeneralPositionViolation("coordinate outside [0,1]");
    }
  }
}

}  // namespace

Instance::Instance(std::vector<ColoredPoint> points, Model model,
                   std::uint64_t seed, int retries)
    : points_(std::move(points)), model_(model), seed_(seed), retries_(retries) {
  check_general_position(points_);
}

Instance generate_instance(int n, std::uint64_t seed, Model model) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  Xoshiro256StarStar rng(seed);
  std::vector<ColoredPoint> pts(n);
  for (int i = 0; i < n; ++i) {
    pts[i].x = model == Model::GridX
                   ? static_cast<double>(i + 1) / static_cast<double>(n)
                   : rng.uniform01();
    pts[i].y = rng.uniform01();
    pts[i].color = rng.coin() ? Color::Blue : Color::Red;
  }

  // Coordinate collisions have probability zero; redraw from the same
  // stream until distinct, counting retries.
  int retries = 0;
  for (;;) {
    bool clean = true;
    std::set<double> xs, ys;
    for (auto& p : pts) {
      if (model == Model::UniformSquare && !xs.insert(p.x).second) {
        p.x = rng.uniform01();
        ++retries;
        clean = false;
      }
      if (!ys.insert(p.y).second) {
        p.y = rng.uniform01();
        ++retries;
        clean = false;
      }
    }
    if (clean) break;
  }

  std::sort(pts.begin(), pts.end(),
            [](const ColoredPoint& a, const ColoredPoint& b) { return a.x < b.x; });
  return Instance(std::move(pts), model, seed, retries);
}

Rect bbox(const ColoredPoint& p, const ColoredPoint& q) {
  return Rect{std::min(p.x, q.x), std::max(p.x, q.x), std::min(p.y, q.y),
              std::max(p.y, q.y)};
}

bool rects_disjoint(const Rect& r1, const Rect& r2) {
  return r1.xmax < r2.xmin || r2.xmax < r1.xmin || r1.ymax < r2.ymin ||
         r2.ymax < r1.ymin;
}

std::vector<int> points_in_rect(const Instance& inst, const Rect& r) {
  std::vector<int> out;
  for (int i = 0; i < inst.n(); ++i) {
    const auto& p = inst.point(i);
    if (r.contains(p.x, p.y)) out.push_back(i);
  }
  return out;
}

ValidationReport validate_matching(const Instance& inst, const Matching& m) {
  for (const auto& [i, j] : m.pairs) {
    if (i < 0 || j < 0 || i >= inst.n() || j >= inst.n()) {
      throw IndexOutOfRange("matching references point index out of range");
    }
  }

  ValidationReport report;
  std::set<int> used;
  for (const auto& pr : m.pairs) {
    if (pr.first == pr.second || !used.insert(pr.first).second ||
        !used.insert(pr.second).second) {
      report.valid = false;
      report.violation = "point matched more than once";
      report.offending = {pr};
      return report;
    }
  }
  for (const auto& pr : m.pairs) {
    if (inst.point(pr.first).color != inst.point(pr.second).color) {
      report.valid = false;
      report.violation = "pair colors differ";
      report.offending = {pr};
      return report;
    }
  }
  for (const auto& pr : m.pairs) {
    const Rect r = bbox(inst.point(pr.first), inst.point(pr.second));
    const auto inside = points_in_rect(inst, r);
    if (inside.size() != 2) {
      report.valid = false;
      report.violation = "bounding box covers a third point";
      report.offending = {pr};
      return report;
    }
  }
  for (std::size_t a = 0; a < m.pairs.size(); ++a) {
    const Rect ra = bbox(inst.point(m.pairs[a].first), inst.point(m.pairs[a].second));
    for (std::size_t b = a + 1; b < m.pairs.size(); ++b) {
      const Rect rb =
          bbox(inst.point(m.pairs[b].first), inst.point(m.pairs[b].second));
      if (!rects_disjoint(ra, rb)) {
        report.valid = false;
        report.violation = "rectangles intersect";
        report.offending = {m.pairs[a], m.pairs[b]};
        return report;
      }
    }
  }
  return report;
}

Instance perturb_y(const Instance& inst, int i, double new_y) {
  if (i < 0 || i >= inst.n()) throw IndexOutOfRange("perturb_y: bad index");
  if (new_y < 0.0 || new_y > 1.0) {
    throw std::invalid_argument("perturb_y: y outside [0,1]");
  }
  auto pts = inst.points();
  for (int k = 0; k < inst.n(); ++k) {
    if (k != i && pts[k].y == new_y) {
      throw GeneralPositionViolation("perturb_y: y collides with point " +
                                     std::to_string(k));
    }
  }
  pts[i].y = new_y;
  return Instance(std::move(pts), inst.model(), inst.seed(), inst.retries());
}

Instance flip_color(const Instance& inst, int i) {
  if (i < 0 || i >= inst.n()) throw IndexOutOfRange("flip_color: bad index");
  auto pts = inst.points();
  pts[i].color = pts[i].color == Color::Red ? Color::Blue : Color::Red;
  return Instance(std::move(pts), inst.model(), inst.seed(), inst.retries());
}

Instance apply_monotone_map(const Instance& inst, MonotoneMap map) {
  auto apply = [map](double t) {
    switch (map) {
      case MonotoneMap::Cube:
        return t * t * t;
      case MonotoneMap::Sqrt:
        return std::sqrt(t);
      case MonotoneMap::AffineUp:
        return (t + 1.0) / 2.0;
    }
    return t;
  };
  auto pts = inst.points();
  for (auto& p : pts) {
    p.x = apply(p.x);
    p.y = apply(p.y);
  }
  // The grid-x structure does not survive remapping.
  return Instance(std::move(pts), Model::UniformSquare, inst.seed(),
                  inst.retries());
}

}  // namespace rectmatch
