#pragma once

#include <Eigen/Dense>

#include <vector>

#include "supmech/error.hpp"

namespace supmech {

// Finite-difference and interpolation weights on arbitrary nodes (Fornberg
// recursion), plus dense differentiation matrices used by the symbol
// calculus.  A stencil of s nodes reproduces any polynomial of degree
// <= s-1 exactly, including one-sided stencils at interval edges.

// Weights w such that f^(order)(z) ~= sum_i w[i] f(nodes[i]).
inline std::vector<double> fd_weights(double z, const std::vector<double>& nodes,
                                      int order) {
  const int n = static_cast<int>(nodes.size());
  require(order >= 0, "derivative order must be nonnegative");
  require(n > order, "stencil needs more nodes than the derivative order");
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    const int mn = std::min(i, order);
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      require(c3 != 0.0, "repeated stencil node");
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - (nodes[i - 1] - z) * c[i - 1][k]) / c2;
        c[i][0] = -c1 * (nodes[i - 1] - z) * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = ((nodes[i] - z) * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = (nodes[i] - z) * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][order];
  return w;
}

// N x N differentiation matrix on the uniform nodes x_j = j*dx, using
// `points`-wide stencils, centered in the interior and one-sided at the
// edges (no periodic wrap).  Exact on polynomials of degree <= points-1.
inline Eigen::MatrixXd derivative_matrix(int n, double dx, int order,
                                         int points = 9) {
  require(n >= points, "grid too small for the stencil");
  require(points > order, "stencil needs more nodes than the derivative order");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> nodes(points);
  for (int i = 0; i < n; ++i) {
    int start = std::clamp(i - points / 2, 0, n - points);
    for (int s = 0; s < points; ++s) nodes[s] = (start + s - i) * dx;
    const std::vector<double> w = fd_weights(0.0, nodes, order);
    for (int s = 0; s < points; ++s) d(i, start + s) = w[s];
  }
  return d;
}

// Weights interpolating f(z) from `points` consecutive nodes of a periodic
// uniform grid, as (first node index, weights).  z is measured in units of
// the node spacing from node 0 of the full grid.
inline std::pair<long, std::vector<double>> periodic_interp_weights(
    double z, int points) {
  const long first = static_cast<long>(std::floor(z)) - (points - 1) / 2;
  std::vector<double> nodes(points);
  for (int s = 0; s < points; ++s) nodes[s] = static_cast<double>(first + s);
  return {first, fd_weights(z, nodes, 0)};
}

}  // namespace supmech
