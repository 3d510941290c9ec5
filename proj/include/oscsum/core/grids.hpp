#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "oscsum/core/errors.hpp"

namespace oscsum {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence; accurate to a few ulps for
/// the orders used here (n <= 128).
inline GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // Recompute the derivative at the converged node.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Cached 16-point rule; the panel order used by the oscillatory integrator.
inline const GaussRule& gauss_legendre_16() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

/// Quadrature for the normalized measure (1/2pi) dt on [-pi, pi).
///
/// Uniform periodic (trapezoidal) rule: it integrates every trigonometric
/// polynomial of degree < M exactly, which covers |f|^{2m} for f of degree
/// < N whenever M > 2m(N-1).
class CircleGrid {
 public:
  explicit CircleGrid(std::size_t nodes) {
    if (nodes < 2) throw PreconditionError("CircleGrid needs at least 2 nodes");
    nodes_.resize(nodes);
    weights_.assign(nodes, 1.0 / static_cast<double>(nodes));
    for (std::size_t m = 0; m < nodes; ++m)
      nodes_[m] = -std::numbers::pi +
                  2.0 * std::numbers::pi * static_cast<double>(m) /
                      static_cast<double>(nodes);
  }

  /// Default resolution for trigonometric polynomials of length N:
  /// max(4N, 256) nodes.
  static CircleGrid for_length(std::size_t n) {
    return CircleGrid(std::max<std::size_t>(4 * n, 256));
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Quadrature for Lebesgue measure on [0, 1]; weights sum to 1.
class UnitIntervalGrid {
 public:
  enum class Kind { GaussLegendre, Midpoint };

  /// Composite Gauss-Legendre with `panels` equal panels of `order` nodes.
  static UnitIntervalGrid gauss(std::size_t panels, int order = 16) {
    if (panels < 1 || order < 1)
      throw PreconditionError("UnitIntervalGrid: empty rule");
    const GaussRule base =
        order == 16 ? gauss_legendre_16() : gauss_legendre(order);
    UnitIntervalGrid g(Kind::GaussLegendre);
    const double h = 1.0 / static_cast<double>(panels);
    g.nodes_.reserve(panels * order);
    g.weights_.reserve(panels * order);
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = (static_cast<double>(p) + 0.5) * h;
      for (int k = 0; k < order; ++k) {
        g.nodes_.push_back(mid + 0.5 * h * base.nodes[k]);
        g.weights_.push_back(0.5 * h * base.weights[k]);
      }
    }
    return g;
  }

  /// Composite Gauss-Legendre with at least `min_nodes` nodes.
  static UnitIntervalGrid gauss_with_nodes(std::size_t min_nodes,
                                           int order = 16) {
    const std::size_t panels =
        std::max<std::size_t>(1, (min_nodes + order - 1) / order);
    return gauss(panels, order);
  }

  /// Uniform midpoint rule, nodes (j + 1/2)/M. Sums t_i + s_j of two
  /// midpoint grids of equal size lie on the lattice (i + j + 1)/M, so
  /// kernels depending on t + s become Hankel matrices.
  static UnitIntervalGrid midpoint(std::size_t m) {
    if (m < 1) throw PreconditionError("UnitIntervalGrid: empty rule");
    UnitIntervalGrid g(Kind::Midpoint);
    g.nodes_.resize(m);
    g.weights_.assign(m, 1.0 / static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j)
      g.nodes_[j] = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
    return g;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  explicit UnitIntervalGrid(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace oscsum
