#pragma once

// Shared oracles and fixture builders. Everything here is intentionally
// naive and independent of the library's solver/numerics paths.

#include <Eigen/Dense>
#include <vector>

#include "rectmatch/geometry.hpp"
#include "rectmatch/solvers.hpp"

namespace testutil {

inline rectmatch::Instance make_instance(
    std::vector<std::tuple<double, double, char>> rows) {
  std::vector<rectmatch::ColoredPoint> pts;
  for (auto& [x, y, c] : rows) {
    pts.push_back({x, y, c == 'R' ? rectmatch::Color::Red : rectmatch::Color::Blue});
  }
  return rectmatch::Instance(std::move(pts));
}

// O(n^3) candidate-pair enumeration straight from the definition.
inline std::vector<std::pair<int, int>> naive_candidate_pairs(
    const rectmatch::Instance& inst) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = i + 1; j < inst.n(); ++j) {
      if (inst.point(i).color != inst.point(j).color) continue;
      const auto r = rectmatch::bbox(inst.point(i), inst.point(j));
      int inside = 0;
      for (int k = 0; k < inst.n(); ++k) {
        const auto& p = inst.point(k);
        if (r.contains(p.x, p.y)) ++inside;
      }
      if (inside == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

// Power iteration from a deliberately asymmetric start; oracle for the
// linear-solve stationary distribution.
inline Eigen::VectorXd power_iteration_stationary(const Eigen::MatrixXd& Q,
                                                  long iters = 200000) {
  const int n = static_cast<int>(Q.rows());
  Eigen::RowVectorXd p = Eigen::RowVectorXd::Zero(n);
  p(0) = 1.0;
  for (long it = 0; it < iters; ++it) p = p * Q;
  return p.transpose();
}

// Column-stochastic P from a row-stochastic Q.
inline Eigen::MatrixXd Q_to_P(const Eigen::MatrixXd& Q) { return Q.transpose(); }

}  // namespace testutil
