#include "discenv/functionals.hpp"

#include "discenv/roots.hpp"

#include <cmath>

namespace discenv {

std::string to_string(Route r) {
  switch (r) {
  case Route::direct:
    return "direct";
  case Route::lifted:
    return "lifted";
  case Route::jensen:
    return "jensen";
  }
  return "direct";
}

Route route_from_string(const std::string& s) {
  if (s == "direct") return Route::direct;
  if (s == "lifted") return Route::lifted;
  if (s == "jensen") return Route::jensen;
  throw ConfigError("unknown route '" + s + "'");
}

double extended_sum(double a, double b) {
  if ((a == -kInf && b == kInf) || (a == kInf && b == -kInf))
    throw NumericalError("-inf boundary weight combined with +inf interior term");
  return a + b;
}

namespace detail {

void require_inside(const std::optional<ConeDomain>& domain, const std::vector<CVec>& pts) {
  if (!domain) return;
  for (const auto& z : pts)
    if (!domain->contains(z)) throw InfeasibleError("infeasible disc: boundary sample outside the domain");
}

} // namespace detail

JensenMean jensen_interior(const std::vector<Complex>& p, int start_nodes) {
  const double centre = std::abs(horner(p, Complex{0.0, 0.0}));
  if (centre == 0.0) return {kInf, 0};
  auto mean_at = [&](int n) {
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(horner(p, std::polar(1.0, 2.0 * kPi * j / n)));
      if (a == 0.0) throw InfeasibleError("boundary zero: f_0 vanishes on the unit circle");
      s[static_cast<std::size_t>(j)] = std::log(a);
    }
    return circle_mean(s).value;
  };
  int n = std::max(start_nodes, 8);
  double prev = mean_at(n);
  constexpr int kMaxNodes = 1 << 22;
  while (n < kMaxNodes) {
    const double next = mean_at(2 * n);
    n *= 2;
    const bool done = std::abs(next - prev) <= 1e-13 * std::max(1.0, std::abs(next));
    prev = next;
    if (done) break;
  }
  return {prev - std::log(centre), n};
}

FunctionalValue sz_functional(const Weight& phi, const AnalyticDiscLift& disc, Route route, const QuadratureSettings& q,
                              const std::optional<ConeDomain>& domain) {
  if (route == Route::lifted) throw ConfigError("S-Z functional supports routes direct and jensen");
  const BoundaryGrid grid(q.nodes);
  const std::vector<CVec> pts = detail::boundary_points(disc, grid);
  detail::require_inside(domain, pts);
  std::vector<double> s;
  s.reserve(pts.size());
  for (const auto& z : pts) {
    if (z(0) == Complex{0.0, 0.0}) throw InfeasibleError("boundary zero: disc boundary meets the hyperplane at infinity");
    s.push_back(phi(z));
  }

  FunctionalValue v;
  v.route = route;
  v.quadrature = q;
  v.boundary_term = circle_mean(s).value;
  const std::vector<Complex> f0 = disc.component(0);
  if (route == Route::jensen) {
    const JensenMean jm = jensen_interior(f0, q.nodes);
    v.interior_term = jm.interior;
    v.jensen_nodes = jm.nodes;
    v.centre_at_infinity = (jm.interior == kInf);
  } else {
    const RootReport rr = roots_in_unit_disc(f0);
    if (rr.centre_on_hyperplane) {
      v.interior_term = kInf;
      v.interior_distinct = kInf;
      v.centre_at_infinity = true;
    } else {
      double with_mult = 0.0;
      double distinct = 0.0;
      for (const auto& r : rr.roots) {
        with_mult -= r.multiplicity * std::log(std::abs(r.value));
        distinct -= std::log(std::abs(r.value));
      }
      v.interior_term = with_mult;
      v.interior_distinct = distinct;
    }
  }
  v.total = extended_sum(v.boundary_term, v.interior_term);
  return v;
}

IdentityResidual identity_check_eqH(const Weight& phi, const AnalyticDiscLift& disc, const QuadratureSettings& q) {
  IdentityResidual r;
  r.quadrature = q;
  r.direct = omega_functional_direct(phi, disc, q).total;
  r.lifted = omega_functional_lifted(lift_weight(phi), disc, q).total;
  r.residual = std::abs(r.direct - r.lifted);
  return r;
}

} // namespace discenv
