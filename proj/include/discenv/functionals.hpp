#pragma once

#include "discenv/disc.hpp"
#include "discenv/domain.hpp"
#include "discenv/quadrature.hpp"
#include "discenv/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discenv {

enum class Route { direct, lifted, jensen };

std::string to_string(Route r);
Route route_from_string(const std::string& s);

/// Value of a disc functional with its boundary/interior breakdown.
struct FunctionalValue {
  double total = 0.0;
  double boundary_term = 0.0;
  double interior_term = 0.0;
  Route route = Route::direct;
  QuadratureSettings quadrature;
  int jensen_nodes = 0;               // nodes actually used by the Jensen mean
  bool centre_at_infinity = false;    // S-Z functional with f_0(0) = 0
  std::optional<double> interior_distinct; // S-Z direct route without multiplicities
};

/// Sum of two extended reals where +inf dominates; -inf + +inf throws.
double extended_sum(double a, double b);

namespace detail {

template <DiscLike D>
std::vector<CVec> boundary_points(const D& disc, const BoundaryGrid& grid) {
  std::vector<CVec> pts;
  pts.reserve(static_cast<std::size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j) pts.push_back(disc.value(grid.node(j)));
  return pts;
}

void require_inside(const std::optional<ConeDomain>& domain, const std::vector<CVec>& pts);

} // namespace detail

/// H_phi(f) = int_T phi~ o f dsigma for a logarithmically homogeneous phi~.
template <DiscLike D>
FunctionalValue poisson_functional(const LogHomWeight& phi, const D& disc, const QuadratureSettings& q = {}) {
  const BoundaryGrid grid(q.nodes);
  const std::vector<CVec> pts = detail::boundary_points(disc, grid);
  detail::require_inside(phi.domain(), pts);
  std::vector<double> s;
  s.reserve(pts.size());
  for (const auto& z : pts) s.push_back(phi.unchecked(z));
  FunctionalValue v;
  v.boundary_term = circle_mean(s).value;
  v.interior_term = 0.0;
  v.total = v.boundary_term;
  v.route = Route::direct;
  v.quadrature = q;
  return v;
}

/// H_{omega,phi}(f) = -(1/2pi) int_D log|.| f*omega + int_T phi o f dsigma,
/// with f*omega from the closed-form pullback density.
template <DiscLike D>
FunctionalValue omega_functional_direct(const Weight& phi, const D& disc, const QuadratureSettings& q = {},
                                        const std::optional<ConeDomain>& domain = std::nullopt) {
  const BoundaryGrid grid(q.nodes);
  const std::vector<CVec> pts = detail::boundary_points(disc, grid);
  detail::require_inside(domain, pts);
  std::vector<double> s;
  s.reserve(pts.size());
  for (const auto& z : pts) s.push_back(phi(z));
  FunctionalValue v;
  v.boundary_term = circle_mean(s).value;
  v.interior_term = -riesz_area_term(disc, AreaQuadrature(q.radial, q.angular));
  v.total = extended_sum(v.boundary_term, v.interior_term);
  v.route = Route::direct;
  v.quadrature = q;
  return v;
}

/// H_{omega,phi}(f) = H_{phi~}(f~) - log|f~(0)|.
template <DiscLike D>
FunctionalValue omega_functional_lifted(const LogHomWeight& phi, const D& disc, const QuadratureSettings& q = {}) {
  FunctionalValue v = poisson_functional(phi, disc, q);
  v.interior_term = -std::log(disc.value(Complex{0.0, 0.0}).norm());
  v.total = extended_sum(v.boundary_term, v.interior_term);
  v.route = Route::lifted;
  return v;
}

/// -log|p(0)| + int_T log|p| dsigma by trapezoidal means on doubling grids
/// until two successive means agree to 1e-13 (or 2^22 nodes).
/// Throws InfeasibleError if p vanishes at a node.
struct JensenMean {
  double interior = 0.0;
  int nodes = 0;
};
JensenMean jensen_interior(const std::vector<Complex>& p, int start_nodes = kDefaultNodes);

/// Siciak-Zahariuta functional -sum_a m_a log|a| + int_T phi o f dsigma for
/// the first homogeneous coordinate f_0 of the lift. Route jensen uses the
/// boundary mean of log|f_0|; route direct locates the zeros of f_0 in D.
FunctionalValue sz_functional(const Weight& phi, const AnalyticDiscLift& disc, Route route,
                              const QuadratureSettings& q = {},
                              const std::optional<ConeDomain>& domain = std::nullopt);

struct IdentityResidual {
  double direct = 0.0;
  double lifted = 0.0;
  double residual = 0.0;
  QuadratureSettings quadrature;
};

/// |H_{omega,phi} direct - (H_{phi~}(f~) - log|f~(0)|)|.
IdentityResidual identity_check_eqH(const Weight& phi, const AnalyticDiscLift& disc, const QuadratureSettings& q = {});

} // namespace discenv
