#pragma once

#include "discenv/disc.hpp"
#include "discenv/domain.hpp"
#include "discenv/optimizer.hpp"
#include "discenv/projective.hpp"
#include "discenv/quadrature.hpp"
#include "discenv/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discenv {

/// omega: H_{omega,phi} on P^n; sz: Siciak-Zahariuta functional in the chart z_0 != 0.
enum class EnvelopeMode { omega, sz };

std::string to_string(EnvelopeMode m);
EnvelopeMode mode_from_string(const std::string& s);

/// Polynomial discs of degree d with the centre pinned to lift(x).
struct DiscFamilySpec {
  int degree = 6;
  double coeff_bound = 10.0; // bound on |c_k| for k >= 1
  double margin = 1e-3;      // required unit clearance of boundary samples
};

struct OptimizerSettings {
  int restarts = 20;
  int evaluations = 2000;
  std::uint64_t seed = 7;
  int search_nodes = 0; // boundary nodes used during search; 0 = acceptance nodes
  int threads = 0;
};

struct EnvelopeProblem {
  EnvelopeMode mode = EnvelopeMode::omega;
  ProjPoint x;
  ConeDomain domain;
  Weight weight = Weight::zero();
  DiscFamilySpec family;
  QuadratureSettings quadrature;
  OptimizerSettings optimizer;
  std::vector<AnalyticDiscLift> pool; // shared witnesses, evaluated before the search
};

/// Lower-bound candidate: an omega-psh function on P^n (omega mode) or a
/// Lelong-class function on C^n (sz mode), shifted so that v <= phi on W.
struct Candidate {
  enum class Kind {
    constant,    // v = 0 + shift
    log_poly,    // omega: (1/d) log|P(z)| - log|z| + shift
    log_plus,    // sz:    log^+ |w| + shift
    affine_poly, // sz:    (1/d) log|P(1, w)| + shift
  };
  Kind kind = Kind::constant;
  std::string id;
  std::optional<HomPoly> poly;
  std::optional<double> shift; // unset: chosen from W-samples

  /// Unshifted value at the projective point with representative z.
  double raw(const CVec& z) const;
};

struct CandidateLibrary {
  std::vector<Candidate> candidates;
  int samples = 512;
  std::uint64_t seed = 7;

  /// Constant plus coordinate candidates for the given mode and dimension.
  static CandidateLibrary standard(EnvelopeMode mode, int ambient_dim);
};

struct LowerBound {
  double value = -kInf;
  std::string candidate;
  std::vector<std::string> excluded;
};

/// max over admissible candidates of v(x).
LowerBound lower_bound(const ProjPoint& x, const ConeDomain& domain, const Weight& phi, EnvelopeMode mode,
                       const CandidateLibrary& library);

struct EnvelopeEstimate {
  bool found = false;
  double upper = kInf;
  std::optional<AnalyticDiscLift> witness;
  std::string witness_source; // "pool:i", "restart:i"
  std::optional<double> lower;
  std::string lower_candidate;
  std::optional<double> gap;
  bool inconsistent = false;       // lower > upper + 1e-6
  std::vector<double> trace;       // per-restart best feasible value (inf if none)
  std::vector<double> best_so_far; // running minimum of pool value and trace
  double pool_best = kInf;
  int evaluations = 0;
  std::optional<double> route_check; // sz: |jensen - direct| on the witness
  std::string message;
};

/// Effective cone: the domain, intersected with {z_0 != 0} in sz mode.
ConeDomain effective_domain(const EnvelopeProblem& p);

/// Functional of the family at acceptance quality: lifted omega route, or
/// S-Z with zeros located directly.
double family_functional(EnvelopeMode mode, const Weight& phi, const AnalyticDiscLift& disc, const QuadratureSettings& q);

/// Boundary clearance >= margin on `nodes` samples, centre == lift(x), and
/// origin avoidance on the validation grid.
bool witness_feasible(const EnvelopeProblem& p, const AnalyticDiscLift& disc, int nodes);

/// Warm-start discs for x and the domain: geodesic circles through domain
/// anchors and small circles around them.
std::vector<AnalyticDiscLift> warm_starts(const EnvelopeProblem& p);

EnvelopeEstimate minimize(const EnvelopeProblem& p, const CandidateLibrary* library = nullptr);

/// minimize at each point, warm-starting from the previous witness
/// recentred at the next point.
std::vector<EnvelopeEstimate> envelope_grid(const std::vector<ProjPoint>& points, const EnvelopeProblem& base,
                                            const CandidateLibrary* library = nullptr);

} // namespace discenv
