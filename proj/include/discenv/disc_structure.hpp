#pragma once

#include "discenv/disc.hpp"
#include "discenv/domain.hpp"
#include "discenv/quadrature.hpp"
#include "discenv/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace discenv {

/// Inputs of the degree-one structure disc f_{x,w}.
struct StructureDiscParams {
  CVec x;
  CVec w;
  double r = 0.0;
  bool small_step = false; // set when |x - w| < 1 (r < |x - w| still holds)
};

/// r = min(|x-w| / (1 + |x-w|), dist_lb(w) / 2).
double radius_r(const CVec& x, const CVec& w, const ConeDomain& domain);

/// Validates x, w (w in the cone, x off the complex line through w) and
/// fills in r. Throws ConfigError on violated preconditions.
StructureDiscParams make_structure_params(const CVec& x, const CVec& w, const ConeDomain& domain);

/// f(t) = (|x-w|/r - r/|x-w|) t w + (1 + (r/|x-w|) t) x.
AnalyticDiscLift make_structure_disc(const StructureDiscParams& p);

/// Factored form: the bracket w + ((D + r t)/(r + D t)) (r/D)(x - w) with
/// D = |x - w|, so that f(t) = (1 + (D/r) t) * bracket(t).
CVec structure_bracket(const StructureDiscParams& p, Complex t);

struct FeasibilityReport {
  bool feasible = false;
  bool boundary_inside = false;
  bool avoids_origin = false;
  double min_boundary_clearance = 0.0; // unit clearance
  double min_norm = 0.0;               // over the validation grid
  int worst_node = -1;
  std::string message;
};

/// Checks f(T) in the cone on `nodes` samples and min |f| > delta_min on
/// the validation grid. Reports, never throws.
FeasibilityReport verify_feasible(const AnalyticDiscLift& disc, const ConeDomain& domain, int nodes = kDefaultNodes);

struct HomotopyFamily {
  std::vector<AnalyticDiscLift> discs;
  std::vector<double> coefficient_jumps; // max column-norm change between neighbours
  double max_jump = 0.0;
};

/// Discs f_{x, gamma(s)} along a sampled path. Rejects samples outside the
/// cone, samples on the line through x, and linear segments meeting it.
HomotopyFamily centre_homotopy(const CVec& x, const std::vector<CVec>& path, const ConeDomain& domain);

struct EpsilonSearchConfig {
  double epsilon = 1e-2;
  int directions = 32;
  int first_exponent = 0;    // first radius 2^{-first_exponent}
  double floor = 1e-10;      // smallest |x - w| tried
  std::uint64_t seed = 7;
  int nodes = kDefaultNodes;
};

struct EpsilonWitness {
  bool success = false;
  CVec w;
  double distance = 0.0; // |x - w|
  AnalyticDiscLift disc;
  double value = kInf;        // H_phi~(f_{x,w})
  double target = 0.0;        // phi~(x) + epsilon
  int radii_tried = 0;
  int evaluations = 0;
  std::string message;
};

/// Searches w on shrinking spheres |x - w| = 2^{-k} with a fixed number of
/// seeded directions per radius, stopping at the first radius where some
/// disc satisfies H_phi~(f_{x,w}) <= phi~(x) + epsilon. Among successes the
/// smallest (value, direction index) wins.
EpsilonWitness epsilon_upper_bound(const CVec& x, const LogHomWeight& phi, const ConeDomain& domain,
                                   const EpsilonSearchConfig& cfg = {});

} // namespace discenv
