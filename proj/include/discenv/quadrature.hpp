#pragma once

#include "discenv/common.hpp"
#include "discenv/disc.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace discenv {

inline constexpr int kDefaultNodes = 1024;
inline constexpr int kDefaultRadial = 128;
inline constexpr int kDefaultAngular = 256;

/// Equispaced nodes exp(2 pi i j / N) on the unit circle with weights 1/N.
class BoundaryGrid {
public:
  explicit BoundaryGrid(int nodes = kDefaultNodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Complex>& nodes() const { return nodes_; }
  Complex node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  double weight() const { return 1.0 / static_cast<double>(nodes_.size()); }

private:
  std::vector<Complex> nodes_;
};

struct CircleMean {
  double value = 0.0;
  bool singular = false; // some sample was -inf
};

/// Normalized arclength mean of boundary samples. -inf samples propagate.
CircleMean circle_mean(std::span<const double> samples);

/// Gauss-Legendre nodes and weights on (a, b).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Tensor polar rule for integrals over the unit disc against area measure.
/// The radius is parametrized as rho = s^2 with Gauss-Legendre in s; the
/// Jacobian rho drho = 2 s^3 ds is folded into the weights.
class AreaQuadrature {
public:
  AreaQuadrature(int n_radial = kDefaultRadial, int n_angular = kDefaultAngular);

  int n_radial() const { return n_radial_; }
  int n_angular() const { return n_angular_; }
  const std::vector<Complex>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <class F>
  double integrate(F&& g) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * g(nodes_[i]);
    return acc;
  }

private:
  int n_radial_;
  int n_angular_;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
};

/// Quadrature resolution used by the functional evaluators.
struct QuadratureSettings {
  int nodes = kDefaultNodes;
  int radial = kDefaultRadial;
  int angular = kDefaultAngular;

  QuadratureSettings doubled() const { return {2 * nodes, 2 * radial, 2 * angular}; }
};

template <class D>
concept DiscLike = requires(const D& d, Complex t) {
  { d.value(t) } -> std::convertible_to<CVec>;
  { d.derivative(t) } -> std::convertible_to<CVec>;
  { d.delta_min() } -> std::convertible_to<double>;
};

/// Laplacian of log|f| at t, i.e. the density of the pulled back
/// Fubini-Study form: 2 (|f|^2 |f'|^2 - |<f', f>|^2) / |f|^4.
template <DiscLike D>
double fs_pullback_density(const D& disc, Complex t) {
  const CVec f = disc.value(t);
  const CVec df = disc.derivative(t);
  const double n2 = f.squaredNorm();
  if (std::sqrt(n2) < disc.delta_min())
    throw NumericalError("pullback density evaluated near the origin");
  const double cross = std::norm(hdot(df, f));
  return 2.0 * (n2 * df.squaredNorm() - cross) / (n2 * n2);
}

/// (1/2pi) int_D log|t| Laplacian(log|f|) dA. By the Riesz formula this
/// equals log|f(0)| - circle_mean(log|f|).
template <DiscLike D>
double riesz_area_term(const D& disc, const AreaQuadrature& quad) {
  const double total = quad.integrate([&](Complex t) {
    return std::log(std::abs(t)) * fs_pullback_density(disc, t);
  });
  return total / (2.0 * kPi);
}

/// circle_mean(log|f|) on the given grid.
template <DiscLike D>
double boundary_log_norm_mean(const D& disc, const BoundaryGrid& grid) {
  std::vector<double> s(static_cast<std::size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) s[static_cast<std::size_t>(j)] = std::log(disc.value(grid.node(j)).norm());
  return circle_mean(s).value;
}

} // namespace discenv
