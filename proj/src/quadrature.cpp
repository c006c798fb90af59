#include "discenv/quadrature.hpp"

#include <cmath>

namespace discenv {

BoundaryGrid::BoundaryGrid(int nodes) {
  if (nodes < 1) throw ConfigError("boundary grid needs at least one node");
  nodes_.reserve(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) nodes_.push_back(std::polar(1.0, 2.0 * kPi * j / nodes));
}

CircleMean circle_mean(std::span<const double> samples) {
  if (samples.empty()) throw ConfigError("circle_mean of an empty sample set");
  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  bool has_pos_inf = false;
  for (double x : samples) {
    if (std::isnan(x)) throw NumericalError("circle_mean: NaN boundary sample");
    if (std::isinf(x)) {
      if (x < 0) return {-kInf, true};
      has_pos_inf = true;
      continue;
    }
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  if (has_pos_inf) return {kInf, false};
  return {(sum + comp) / static_cast<double>(samples.size()), false};
}

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ConfigError("Gauss-Legendre rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

AreaQuadrature::AreaQuadrature(int n_radial, int n_angular) : n_radial_(n_radial), n_angular_(n_angular) {
  if (n_radial < 1 || n_angular < 1) throw ConfigError("area quadrature needs positive sizes");
  const GaussRule s = gauss_legendre(n_radial, 0.0, 1.0);
  const double dtheta = 2.0 * kPi / n_angular;
  nodes_.reserve(static_cast<std::size_t>(n_radial) * static_cast<std::size_t>(n_angular));
  weights_.reserve(nodes_.capacity());
  for (int i = 0; i < n_radial; ++i) {
    const double si = s.nodes[static_cast<std::size_t>(i)];
    const double rho = si * si;
    const double w = s.weights[static_cast<std::size_t>(i)] * 2.0 * si * si * si * dtheta;
    for (int j = 0; j < n_angular; ++j) {
      nodes_.push_back(std::polar(rho, j * dtheta));
      weights_.push_back(w);
    }
  }
}

} // namespace discenv
