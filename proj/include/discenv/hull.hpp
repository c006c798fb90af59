#pragma once

#include "discenv/disc.hpp"
#include "discenv/envelope.hpp"
#include "discenv/functionals.hpp"
#include "discenv/projective.hpp"
#include "discenv/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discenv {

/// Sampled compact set K in P^n.
struct CompactSetSpec {
  std::vector<ProjPoint> samples;
  bool connected = true;
  std::string name;

  /// Merges samples closer than 1e-12 in the Fubini-Study distance.
  static CompactSetSpec make(std::vector<ProjPoint> samples, bool connected = true, std::string name = "K");
  /// {[1 : R e^{i theta}]} sampled at `count` equally spaced angles, in P^1.
  static CompactSetSpec circle(double radius, int count, std::string name = "circle");

  double distance(const ProjPoint& x) const; // min Fubini-Study distance to the samples
};

struct LambdaCRho {
  double lambda = 0.0;
  double c = 1.0;
  double rho = 1.0;
};

enum class HullQuantity { lambda, c, rho };

/// Lambda = log C = -log rho from any one of the three.
LambdaCRho lambda_c_rho(double value, HullQuantity from);

struct HullSearchConfig {
  DiscFamilySpec family{6, 10.0, 1e-3};
  OptimizerSettings optimizer{8, 1000, 7, 256, 0};
  QuadratureSettings quadrature;
  std::vector<AnalyticDiscLift> pool;
};

struct HullCertificate {
  ProjPoint x;
  double lambda = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  AnalyticDiscLift witness;
  double value = 0.0; // H_{omega,0}(witness) < lambda + epsilon
  QuadratureSettings quadrature;
};

struct HullResult {
  bool certified = false;
  std::optional<HullCertificate> certificate;
  double best_value = kInf;
  std::optional<AnalyticDiscLift> best_witness;
  std::vector<std::string> warnings;
  std::string message;
};

/// Searches a disc centred at x with boundary in the delta-tube of K whose
/// omega functional is below lambda + epsilon. A failure only means that no
/// such disc was found at this budget.
HullResult hull_test(const ProjPoint& x, const CompactSetSpec& k, double lambda, double epsilon, double delta,
                     const HullSearchConfig& cfg = {});

struct CertificateCheck {
  bool ok = false;
  bool boundary_in_tube = false;
  bool centre_ok = false;
  double value_doubled = 0.0;
  double value_deviation = 0.0;
};

/// Boundary-in-tube, centre, and functional value within `tol` at doubled resolution.
CertificateCheck revalidate(const HullCertificate& cert, const CompactSetSpec& k, double tol = 1e-8);

struct ScheduleResult {
  std::vector<double> deltas;
  std::vector<double> estimates;
  std::vector<std::optional<AnalyticDiscLift>> witnesses;
  double final_estimate = kInf; // upper estimate for Lambda_K(x)
};

/// Envelope estimates over shrinking tubes delta_1 > delta_2 > ... with a
/// shared witness pool; the output is nondecreasing.
ScheduleResult lambda_schedule(const ProjPoint& x, const CompactSetSpec& k, const std::vector<double>& deltas,
                               const HullSearchConfig& cfg = {});

/// Phase circles e^{i theta_j} lift(k) of the K samples on the unit sphere.
struct SphericalLiftSet {
  std::vector<CVec> samples;
  int n_phase = 0;
};
SphericalLiftSet spherical_lift(const CompactSetSpec& k, int n_phase);

/// Euclidean distance from z to the union of the full phase circles over
/// the K samples: min_k sqrt(|z|^2 + 1 - 2 |<z, k>|).
double distance_to_spherical_lift(const CompactSetSpec& k, const CVec& z);

struct NormalizedDisc {
  CompositeDisc disc;
  CVec centre;
  double centre_norm = 0.0;
  double neg_log_centre_norm = 0.0;
  double max_boundary_deviation = 0.0; // max_T | |f~| - 1 |
};

/// f~ = f~_0 / exp(u(r t) + i v(r t)) with u the harmonic extension of
/// log|f~_0| on T and v its conjugate.
NormalizedDisc normalize_disc(const AnalyticDiscLift& f0, double r, int nodes = kDefaultNodes);

struct BPrimeReport {
  NormalizedDisc normalized;
  bool in_tube = false;
  double max_tube_distance = 0.0;
  double centre_bound_lhs = 0.0; // -log|p|
  double centre_bound_rhs = 0.0; // lambda + 2 epsilon + slack
  bool bound_holds = false;
  double p_norm = 0.0;
  double exp_neg_lambda = 0.0;
  std::string message;
};

/// Converts a hull certificate into a normalized disc whose boundary lies
/// near the spherical lift of K, and checks -log|p| <= lambda + 2 eps + slack.
BPrimeReport b_to_bprime(const HullCertificate& cert, const CompactSetSpec& k, double tube_radius, double r,
                         double slack = 1e-4, int nodes = kDefaultNodes);

struct BoundReport {
  double functional = 0.0;     // -(1/2pi) int_D log|.| f*omega
  double neg_log_centre = 0.0; // -log|f~(0)|
  double max_log_norm = 0.0;   // max_T log|f~|
  double epsilon = 0.0;
  bool holds = false;
};

/// Given max_T log|f~| <= eps, checks that the interior omega term is at most
/// -log|f~(0)| + eps + slack. Throws InfeasibleError if the norm bound fails.
template <DiscLike D>
BoundReport bprime_to_b(const D& disc, double epsilon, const QuadratureSettings& q = {}, double slack = 1e-6) {
  BoundReport rep;
  rep.epsilon = epsilon;
  rep.max_log_norm = -kInf;
  const BoundaryGrid dense(4 * q.nodes);
  for (int j = 0; j < dense.size(); ++j)
    rep.max_log_norm = std::max(rep.max_log_norm, std::log(disc.value(dense.node(j)).norm()));
  if (rep.max_log_norm > epsilon) throw InfeasibleError("boundary norm bound max_T log|f| <= eps violated");
  rep.functional = -riesz_area_term(disc, AreaQuadrature(q.radial, q.angular));
  rep.neg_log_centre = -std::log(disc.value(Complex{0.0, 0.0}).norm());
  rep.holds = rep.functional <= rep.neg_log_centre + epsilon + slack;
  return rep;
}

} // namespace discenv
