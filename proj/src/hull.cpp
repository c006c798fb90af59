#include "discenv/hull.hpp"

#include "discenv/harmonic.hpp"

#include <algorithm>
#include <cmath>

namespace discenv {

CompactSetSpec CompactSetSpec::make(std::vector<ProjPoint> samples, bool connected, std::string name) {
  if (samples.empty()) throw ConfigError("compact set needs at least one sample");
  CompactSetSpec k;
  k.connected = connected;
  k.name = std::move(name);
  const int dim = samples.front().ambient_dim();
  for (auto& s : samples) {
    if (s.ambient_dim() != dim) throw ConfigError("compact set samples have mixed dimensions");
    const bool dup = std::any_of(k.samples.begin(), k.samples.end(),
                                 [&](const ProjPoint& q) { return fs_distance(q, s) < 1e-12; });
    if (!dup) k.samples.push_back(std::move(s));
  }
  return k;
}

CompactSetSpec CompactSetSpec::circle(double radius, int count, std::string name) {
  if (count < 1) throw ConfigError("circle needs at least one sample");
  std::vector<ProjPoint> s;
  for (int j = 0; j < count; ++j) {
    CVec w(1);
    w(0) = std::polar(radius, 2.0 * kPi * j / count);
    s.push_back(ProjPoint::from_affine(w));
  }
  return make(std::move(s), true, std::move(name));
}

double CompactSetSpec::distance(const ProjPoint& x) const {
  double d = kInf;
  for (const auto& s : samples) d = std::min(d, fs_distance(x, s));
  return d;
}

LambdaCRho lambda_c_rho(double value, HullQuantity from) {
  LambdaCRho out;
  switch (from) {
  case HullQuantity::lambda:
    if (!std::isfinite(value)) throw ConfigError("Lambda must be finite");
    out.lambda = value;
    out.c = std::exp(value);
    out.rho = std::exp(-value);
    break;
  case HullQuantity::c:
    if (!(value > 0.0)) throw ConfigError("C must be positive");
    out.c = value;
    out.lambda = std::log(value);
    out.rho = 1.0 / value;
    break;
  case HullQuantity::rho:
    if (!(value > 0.0)) throw ConfigError("rho must be positive");
    out.rho = value;
    out.lambda = -std::log(value);
    out.c = 1.0 / value;
    break;
  }
  return out;
}

namespace {

EnvelopeProblem tube_problem(const ProjPoint& x, const CompactSetSpec& k, double delta, const HullSearchConfig& cfg) {
  EnvelopeProblem p;
  p.mode = EnvelopeMode::omega;
  p.x = x;
  p.domain = ConeDomain::tube(k.samples, delta);
  p.weight = Weight::zero();
  p.family = cfg.family;
  p.quadrature = cfg.quadrature;
  p.optimizer = cfg.optimizer;
  p.pool = cfg.pool;
  return p;
}

} // namespace

HullResult hull_test(const ProjPoint& x, const CompactSetSpec& k, double lambda, double epsilon, double delta,
                     const HullSearchConfig& cfg) {
  if (!(delta > 0.0) || !(epsilon > 0.0)) throw ConfigError("hull test needs delta > 0 and epsilon > 0");
  HullResult res;
  if (!k.connected) res.warnings.push_back("K is not marked connected; the characterization assumes connectivity");

  HullCertificate cert;
  cert.x = x;
  cert.lambda = lambda;
  cert.epsilon = epsilon;
  cert.delta = delta;
  cert.quadrature = cfg.quadrature;

  if (k.distance(x) < delta) {
    cert.witness = AnalyticDiscLift::constant(lift(x));
    cert.value = 0.0;
    res.best_value = 0.0;
    res.best_witness = cert.witness;
    res.certified = 0.0 < lambda + epsilon;
    if (res.certified) res.certificate = cert;
    res.message = res.certified ? "x lies in the tube: constant disc certifies" : "constant disc value 0 is not below lambda + epsilon";
    return res;
  }

  const EnvelopeEstimate est = minimize(tube_problem(x, k, delta, cfg));
  if (!est.found) {
    res.message = "no feasible disc found at this budget; membership not certified (this is not a proof that x is outside the hull)";
    return res;
  }
  res.best_value = est.upper;
  res.best_witness = est.witness;
  if (est.upper < lambda + epsilon) {
    cert.witness = *est.witness;
    cert.value = est.upper;
    res.certificate = cert;
    res.certified = true;
    res.message = "certified: consistent with Lambda_K(x) <= lambda at tube radius delta";
  } else {
    res.message = "not certified at this budget: best value is not below lambda + epsilon (this is not a proof that x is outside the hull)";
  }
  return res;
}

CertificateCheck revalidate(const HullCertificate& cert, const CompactSetSpec& k, double tol) {
  CertificateCheck chk;
  const QuadratureSettings q2 = cert.quadrature.doubled();
  const ConeDomain tube = ConeDomain::tube(k.samples, cert.delta);
  const BoundaryGrid grid(q2.nodes);
  chk.boundary_in_tube = tube.unit_clearances(cert.witness.values(grid.nodes())).minCoeff() > 0.0;
  chk.centre_ok = (cert.witness.centre() - lift(cert.x)).norm() <= 1e-12;
  chk.value_doubled = omega_functional_lifted(lift_weight(Weight::zero()), cert.witness, q2).total;
  chk.value_deviation = std::abs(chk.value_doubled - cert.value);
  chk.ok = chk.boundary_in_tube && chk.centre_ok && chk.value_deviation <= tol &&
           chk.value_doubled < cert.lambda + cert.epsilon;
  return chk;
}

ScheduleResult lambda_schedule(const ProjPoint& x, const CompactSetSpec& k, const std::vector<double>& deltas,
                               const HullSearchConfig& cfg) {
  if (deltas.empty()) throw ConfigError("delta schedule is empty");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0)) throw ConfigError("delta schedule must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) throw ConfigError("delta schedule must be strictly decreasing");
  }
  ScheduleResult out;
  out.deltas = deltas;
  std::vector<AnalyticDiscLift> pool = cfg.pool;
  std::vector<EnvelopeProblem> problems;
  for (double delta : deltas) {
    HullSearchConfig c = cfg;
    c.pool = pool;
    EnvelopeProblem p = tube_problem(x, k, delta, c);
    problems.push_back(p);
    if (k.distance(x) < delta) {
      out.estimates.push_back(0.0);
      out.witnesses.emplace_back(AnalyticDiscLift::constant(lift(x)));
      pool.push_back(*out.witnesses.back());
      continue;
    }
    const EnvelopeEstimate est = minimize(p);
    out.estimates.push_back(est.found ? est.upper : kInf);
    out.witnesses.push_back(est.witness);
    if (est.witness) pool.push_back(*est.witness);
  }
  // every pooled witness feasible for a tube bounds its estimate
  for (std::size_t j = 0; j < problems.size(); ++j) {
    for (const auto& w : pool) {
      if (!witness_feasible(problems[j], w, problems[j].quadrature.nodes)) continue;
      const double v = family_functional(EnvelopeMode::omega, Weight::zero(), w, problems[j].quadrature);
      if (v < out.estimates[j]) {
        out.estimates[j] = v;
        out.witnesses[j] = w;
      }
    }
  }
  out.final_estimate = out.estimates.back();
  return out;
}

SphericalLiftSet spherical_lift(const CompactSetSpec& k, int n_phase) {
  if (n_phase < 1) throw ConfigError("spherical lift needs n_phase >= 1");
  SphericalLiftSet s;
  s.n_phase = n_phase;
  for (const auto& p : k.samples)
    for (int j = 0; j < n_phase; ++j) s.samples.push_back(std::polar(1.0, 2.0 * kPi * j / n_phase) * lift(p));
  return s;
}

double distance_to_spherical_lift(const CompactSetSpec& k, const CVec& z) {
  double best = kInf;
  const double n2 = z.squaredNorm();
  for (const auto& p : k.samples) best = std::min(best, n2 + 1.0 - 2.0 * std::abs(hdot(z, lift(p))));
  return std::sqrt(std::max(0.0, best));
}

NormalizedDisc normalize_disc(const AnalyticDiscLift& f0, double r, int nodes) {
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("normalization radius must lie in (0, 1)");
  const BoundaryGrid grid(nodes);
  std::vector<double> g(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) g[static_cast<std::size_t>(j)] = std::log(f0.value(grid.node(j)).norm());
  CompositeDisc disc(f0, holomorphic_extension_coeffs(g, r));
  NormalizedDisc out{disc, disc.centre(), 0.0, 0.0, 0.0};
  out.centre_norm = out.centre.norm();
  out.neg_log_centre_norm = -std::log(out.centre_norm);
  const BoundaryGrid dense(4 * nodes);
  for (int j = 0; j < dense.size(); ++j)
    out.max_boundary_deviation = std::max(out.max_boundary_deviation, std::abs(disc.value(dense.node(j)).norm() - 1.0));
  return out;
}

BPrimeReport b_to_bprime(const HullCertificate& cert, const CompactSetSpec& k, double tube_radius, double r,
                         double slack, int nodes) {
  BPrimeReport rep{normalize_disc(cert.witness, r, nodes), false, 0.0, 0.0, 0.0, false, 0.0, 0.0, {}};
  const BoundaryGrid grid(nodes);
  for (int j = 0; j < grid.size(); ++j)
    rep.max_tube_distance =
        std::max(rep.max_tube_distance, distance_to_spherical_lift(k, rep.normalized.disc.value(grid.node(j))));
  rep.in_tube = rep.max_tube_distance < tube_radius;
  rep.centre_bound_lhs = rep.normalized.neg_log_centre_norm;
  rep.centre_bound_rhs = cert.lambda + 2.0 * cert.epsilon + slack;
  rep.bound_holds = rep.centre_bound_lhs <= rep.centre_bound_rhs;
  rep.p_norm = rep.normalized.centre_norm;
  rep.exp_neg_lambda = std::exp(-cert.lambda);
  if (!rep.in_tube)
    rep.message = "boundary leaves the spherical-lift tube at this r; try r closer to 1";
  else if (!rep.bound_holds)
    rep.message = "centre bound -log|p| <= lambda + 2 eps violated";
  else
    rep.message = "ok";
  return rep;
}

} // namespace discenv
