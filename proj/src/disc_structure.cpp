#include "discenv/disc_structure.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace discenv {

namespace {

// Relative distance of x from the complex line through w.
double off_line(const CVec& x, const CVec& w) {
  const double nw2 = w.squaredNorm();
  const CVec perp = x - (hdot(x, w) / nw2) * w;
  return perp.norm() / x.norm();
}

} // namespace

double radius_r(const CVec& x, const CVec& w, const ConeDomain& domain) {
  const double d = (x - w).norm();
  const double lb = domain.dist_lb(w);
  if (!(lb > 0.0)) throw ConfigError("w is not inside the domain (dist_lb <= 0)");
  return std::min(d / (1.0 + d), lb / 2.0);
}

StructureDiscParams make_structure_params(const CVec& x, const CVec& w, const ConeDomain& domain) {
  if (x.size() != w.size() || x.size() != domain.ambient_dim()) throw ConfigError("structure disc: dimension mismatch");
  if (x.size() < 2) throw ConfigError("structure disc needs m >= 2");
  if (!(x.norm() > 0.0) || !(w.norm() > 0.0)) throw ConfigError("structure disc: x and w must be nonzero");
  if (off_line(x, w) <= 1e-12) throw ConfigError("structure disc: x lies on the complex line through w");
  StructureDiscParams p{x, w, radius_r(x, w, domain), false};
  const double d = (x - w).norm();
  p.small_step = d < 1.0;
  if (!(p.r < d)) throw NumericalError("structure disc: r >= |x - w|");
  return p;
}

AnalyticDiscLift make_structure_disc(const StructureDiscParams& p) {
  const double d = (p.x - p.w).norm();
  if (!(d > 0.0) || !(p.r > 0.0)) throw ConfigError("structure disc: zero denominator");
  CMat c(p.x.size(), 2);
  c.col(0) = p.x;
  c.col(1) = (d / p.r - p.r / d) * p.w + (p.r / d) * p.x;
  return AnalyticDiscLift(std::move(c));
}

CVec structure_bracket(const StructureDiscParams& p, Complex t) {
  const double d = (p.x - p.w).norm();
  const Complex mobius = (d + p.r * t) / (p.r + d * t);
  return p.w + mobius * (p.r / d) * (p.x - p.w);
}

FeasibilityReport verify_feasible(const AnalyticDiscLift& disc, const ConeDomain& domain, int nodes) {
  FeasibilityReport rep;
  const BoundaryGrid grid(nodes);
  const Eigen::VectorXd c = domain.unit_clearances(disc.values(grid.nodes()));
  Eigen::Index worst = 0;
  rep.min_boundary_clearance = c.minCoeff(&worst);
  rep.worst_node = static_cast<int>(worst);
  rep.boundary_inside = rep.min_boundary_clearance > 0.0;
  rep.min_norm = disc.min_norm_on_grid();
  rep.avoids_origin = rep.min_norm >= disc.delta_min();
  rep.feasible = rep.boundary_inside && rep.avoids_origin;
  if (!rep.boundary_inside)
    rep.message = "boundary violation at node " + std::to_string(rep.worst_node);
  else if (!rep.avoids_origin)
    rep.message = "origin violation: min norm below delta_min";
  else
    rep.message = "feasible";
  return rep;
}

HomotopyFamily centre_homotopy(const CVec& x, const std::vector<CVec>& path, const ConeDomain& domain) {
  if (path.empty()) throw ConfigError("centre homotopy needs a nonempty path");
  const CVec xhat = x.normalized();
  auto perp = [&](const CVec& g) { CVec p = g - hdot(g, xhat) * xhat; return p; };

  HomotopyFamily fam;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const CVec& g = path[i];
    if (!domain.contains(g)) throw ConfigError("path sample " + std::to_string(i) + " lies outside the domain");
    if (off_line(x, g) <= 1e-12) throw ConfigError("path sample " + std::to_string(i) + " lies on the line through x");
    if (i + 1 < path.size()) {
      const CVec a = perp(g);
      const CVec b = perp(path[i + 1]);
      const CVec ab = b - a;
      const double l2 = ab.squaredNorm();
      double s = 0.0;
      if (l2 > 0.0) s = std::clamp(-hdot(a, ab).real() / l2, 0.0, 1.0);
      const double scale = std::max(g.norm(), path[i + 1].norm());
      if ((a + s * ab).norm() <= 1e-12 * scale)
        throw ConfigError("path segment after sample " + std::to_string(i) + " crosses the line through x");
    }
    fam.discs.push_back(make_structure_disc(make_structure_params(x, g, domain)));
  }
  for (std::size_t i = 0; i + 1 < fam.discs.size(); ++i) {
    const CMat diff = fam.discs[i + 1].coeffs() - fam.discs[i].coeffs();
    const double jump = diff.colwise().norm().maxCoeff();
    fam.coefficient_jumps.push_back(jump);
    fam.max_jump = std::max(fam.max_jump, jump);
  }
  return fam;
}

EpsilonWitness epsilon_upper_bound(const CVec& x, const LogHomWeight& phi, const ConeDomain& domain,
                                   const EpsilonSearchConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!domain.contains(x)) throw ConfigError("epsilon test: x must lie in the domain");
  const double phix = phi.unchecked(x);
  if (!std::isfinite(phix)) throw ConfigError("epsilon test: phi~(x) must be finite");

  EpsilonWitness out;
  out.target = phix + cfg.epsilon;
  const BoundaryGrid grid(cfg.nodes);
  const int m = static_cast<int>(x.size());

  for (int k = cfg.first_exponent;; ++k) {
    const double rho = std::ldexp(1.0, -k);
    if (rho < cfg.floor) break;
    ++out.radii_tried;
    bool found = false;
    for (int i = 0; i < cfg.directions; ++i) {
      std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(k) * 1000003ull + static_cast<std::uint64_t>(i)));
      const CVec w = x + rho * random_unit_vector(m, rng);
      if (!domain.contains(w) || off_line(x, w) <= 1e-12) continue;
      StructureDiscParams p;
      try {
        p = make_structure_params(x, w, domain);
      } catch (const std::exception&) {
        continue;
      }
      const AnalyticDiscLift disc = make_structure_disc(p);
      const CMat vals = disc.values(grid.nodes());
      if (domain.unit_clearances(vals).minCoeff() <= 0.0) continue;
      std::vector<double> s(static_cast<std::size_t>(vals.cols()));
      for (Eigen::Index j = 0; j < vals.cols(); ++j) s[static_cast<std::size_t>(j)] = phi.unchecked(vals.col(j));
      const double value = circle_mean(s).value;
      ++out.evaluations;
      if (value < out.value) {
        out.value = value;
        out.w = w;
        out.distance = (x - w).norm();
        out.disc = disc;
      }
      if (value <= out.target) found = true;
    }
    if (found) {
      out.success = true;
      out.message = "witness found";
      return out;
    }
  }
  out.message = "shrink floor reached without meeting phi~(x) + epsilon";
  return out;
}

} // namespace discenv
