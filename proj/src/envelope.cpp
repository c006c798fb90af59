#include "discenv/envelope.hpp"

#include "discenv/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace discenv {

namespace {

constexpr double kInfeasibleScore = 1e6;

// Real-imaginary flattening of c_1..c_d (column-major over coordinates).
Eigen::VectorXd flatten(const AnalyticDiscLift& disc, int degree) {
  const int m = disc.dimension();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * m * degree);
  for (int k = 1; k <= std::min(degree, disc.degree()); ++k)
    for (int i = 0; i < m; ++i) {
      v(2 * (m * (k - 1) + i)) = disc.coeffs()(i, k).real();
      v(2 * (m * (k - 1) + i) + 1) = disc.coeffs()(i, k).imag();
    }
  return v;
}

CMat unflatten(const CVec& centre, const Eigen::VectorXd& v, int degree) {
  const Eigen::Index m = centre.size();
  CMat c(m, degree + 1);
  c.col(0) = centre;
  for (int k = 1; k <= degree; ++k)
    for (Eigen::Index i = 0; i < m; ++i)
      c(i, k) = Complex{v(2 * (m * (k - 1) + i)), v(2 * (m * (k - 1) + i) + 1)};
  return c;
}

CMat power_table(const BoundaryGrid& grid, int degree) {
  CMat p(degree + 1, grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    Complex t{1.0, 0.0};
    for (int k = 0; k <= degree; ++k) {
      p(k, j) = t;
      t *= grid.node(j);
    }
  }
  return p;
}

// Functional from boundary values; centre is column 0 of the coefficients.
double value_from_boundary(EnvelopeMode mode, const Weight& phi, const CMat& vals, const CVec& centre) {
  std::vector<double> s(static_cast<std::size_t>(vals.cols()));
  if (mode == EnvelopeMode::omega) {
    for (Eigen::Index j = 0; j < vals.cols(); ++j) s[static_cast<std::size_t>(j)] = phi.lifted(vals.col(j));
    return circle_mean(s).value - std::log(centre.norm());
  }
  for (Eigen::Index j = 0; j < vals.cols(); ++j)
    s[static_cast<std::size_t>(j)] = phi(vals.col(j)) + std::log(std::abs(vals(0, j)));
  return circle_mean(s).value - std::log(std::abs(centre(0)));
}

// Scales a disc so its centre equals `centre` when the two are parallel.
std::optional<AnalyticDiscLift> normalize_centre(const AnalyticDiscLift& disc, const CVec& centre) {
  if (disc.dimension() != centre.size()) return std::nullopt;
  const CVec c0 = disc.centre();
  const Complex ratio = hdot(centre, c0) / c0.squaredNorm();
  if ((c0 * ratio - centre).norm() > 1e-12 * centre.norm()) return std::nullopt;
  AnalyticDiscLift out = disc.scaled(ratio);
  return out.recentred(centre);
}

} // namespace

std::string to_string(EnvelopeMode m) { return m == EnvelopeMode::omega ? "omega" : "sz"; }

EnvelopeMode mode_from_string(const std::string& s) {
  if (s == "omega") return EnvelopeMode::omega;
  if (s == "sz") return EnvelopeMode::sz;
  throw ConfigError("unknown envelope mode '" + s + "'");
}

double Candidate::raw(const CVec& z) const {
  switch (kind) {
  case Kind::constant:
    return 0.0;
  case Kind::log_poly:
    return std::log(std::abs((*poly)(z))) / poly->degree - std::log(z.norm());
  case Kind::log_plus:
    return log_plus_norm(z.tail(z.size() - 1) / z(0));
  case Kind::affine_poly: {
    CVec h = z / z(0);
    return std::log(std::abs((*poly)(h))) / poly->degree;
  }
  }
  return 0.0;
}

CandidateLibrary CandidateLibrary::standard(EnvelopeMode mode, int ambient_dim) {
  CandidateLibrary lib;
  lib.candidates.push_back({Candidate::Kind::constant, "constant", std::nullopt, std::nullopt});
  if (mode == EnvelopeMode::omega) {
    for (int i = 0; i < ambient_dim; ++i)
      lib.candidates.push_back({Candidate::Kind::log_poly, "log|z" + std::to_string(i) + "|",
                                HomPoly::coordinate(ambient_dim, i), std::nullopt});
  } else {
    lib.candidates.push_back({Candidate::Kind::log_plus, "log+|w|", std::nullopt, std::nullopt});
    for (int i = 1; i < ambient_dim; ++i)
      lib.candidates.push_back({Candidate::Kind::affine_poly, "log|w" + std::to_string(i) + "|",
                                HomPoly::coordinate(ambient_dim, i), std::nullopt});
  }
  return lib;
}

LowerBound lower_bound(const ProjPoint& x, const ConeDomain& domain, const Weight& phi, EnvelopeMode mode,
                       const CandidateLibrary& library) {
  if (library.candidates.empty()) throw ConfigError("candidate library is empty");
  ConeDomain dom = domain;
  if (mode == EnvelopeMode::sz) {
    CVec e0 = CVec::Zero(domain.ambient_dim());
    e0(0) = 1.0;
    dom = ConeDomain::intersection({domain, ConeDomain::hyperplane_complement(e0)});
  }
  std::mt19937_64 rng(mix_seed(library.seed, 0x5a3));
  std::vector<CVec> samples = dom.sample_closure(library.samples, rng);
  const auto add_centres = [&](const ConeDomain& d) {
    for (const auto& c : d.centres())
      if (dom.contains(c)) samples.push_back(c);
  };
  add_centres(domain);
  for (const auto& m : domain.members()) add_centres(m);
  if (samples.empty()) throw NumericalError("could not sample the domain for candidate shifts");

  LowerBound best;
  const CVec z = lift(x);
  for (const auto& c : library.candidates) {
    double excess = -kInf; // max over samples of raw - phi
    for (const auto& s : samples) excess = std::max(excess, c.raw(s) - phi(s));
    double shift = 0.0;
    if (c.shift) {
      shift = *c.shift;
      if (excess + shift > 1e-12) {
        best.excluded.push_back(c.id);
        continue;
      }
    } else {
      if (!std::isfinite(excess)) {
        best.excluded.push_back(c.id);
        continue;
      }
      shift = -excess;
    }
    const double v = c.raw(z) + shift;
    if (best.candidate.empty() || v > best.value + 1e-12) {
      best.value = v;
      best.candidate = c.id;
    }
  }
  return best;
}

ConeDomain effective_domain(const EnvelopeProblem& p) {
  if (p.mode == EnvelopeMode::omega) return p.domain;
  CVec e0 = CVec::Zero(p.domain.ambient_dim());
  e0(0) = 1.0;
  return ConeDomain::intersection({p.domain, ConeDomain::hyperplane_complement(e0)});
}

double family_functional(EnvelopeMode mode, const Weight& phi, const AnalyticDiscLift& disc,
                         const QuadratureSettings& q) {
  if (mode == EnvelopeMode::omega) return omega_functional_lifted(lift_weight(phi), disc, q).total;
  return sz_functional(phi, disc, Route::direct, q).total;
}

bool witness_feasible(const EnvelopeProblem& p, const AnalyticDiscLift& disc, int nodes) {
  const CVec centre = lift(p.x);
  if (disc.dimension() != centre.size()) return false;
  if ((disc.centre() - centre).norm() > 1e-12) return false;
  const BoundaryGrid grid(nodes);
  const ConeDomain dom = effective_domain(p);
  if (dom.unit_clearances(disc.values(grid.nodes())).minCoeff() < p.family.margin) return false;
  return disc.avoids_origin();
}

std::vector<AnalyticDiscLift> warm_starts(const EnvelopeProblem& p) {
  const CVec xh = lift(p.x);
  const int m = static_cast<int>(xh.size());
  const ConeDomain dom = effective_domain(p);
  std::vector<AnalyticDiscLift> out;

  if (dom.unit_clearance(xh) >= p.family.margin) out.push_back(AnalyticDiscLift::constant(xh).padded(p.family.degree));

  std::vector<CVec> anchors;
  const auto take_centres = [&](const ConeDomain& d) {
    const auto& cs = d.centres();
    if (cs.empty()) return;
    const std::size_t stride = std::max<std::size_t>(1, cs.size() / 16);
    for (std::size_t i = 0; i < cs.size(); i += stride) anchors.push_back(cs[i]);
  };
  take_centres(p.domain);
  for (const auto& mem : p.domain.members()) take_centres(mem);
  std::mt19937_64 rng(mix_seed(p.optimizer.seed, 0xa11));
  for (auto& s : dom.sample(8, rng)) anchors.push_back(std::move(s));

  // complement of a shrunk cap around y on the complex line through x and y
  const auto add_cap_disc = [&](const CVec& y, double radius) {
    const double theta = std::min(radius, kPi / 2) - std::asin(std::min(1.0, 2.0 * p.family.margin));
    if (!(theta > 0.0)) return;
    const Complex alpha = hdot(xh, y);
    const CVec rest = xh - alpha * y;
    const double beta = rest.norm();
    if (beta < 1e-12) return;
    const CVec perp = rest / beta;
    const double rho = 1.0 / std::tan(theta);
    const Complex b = alpha / beta / rho;
    if (std::abs(b) >= 1.0) return;
    CMat c(m, 2);
    c.col(0) = xh;
    c.col(1) = beta * (rho * y + std::conj(b) * perp);
    AnalyticDiscLift d(std::move(c));
    if (d.avoids_origin()) out.push_back(d.padded(p.family.degree));
  };
  const auto cap_discs = [&](const ConeDomain& d) {
    if (d.kind() != ConeDomain::Kind::fs_ball && d.kind() != ConeDomain::Kind::tube) return;
    const auto& cs = d.centres();
    const std::size_t stride = std::max<std::size_t>(1, cs.size() / 16);
    for (std::size_t i = 0; i < cs.size(); i += stride) add_cap_disc(cs[i], d.radius());
  };
  cap_discs(p.domain);
  for (const auto& mem : p.domain.members()) cap_discs(mem);

  for (const auto& y : anchors) {
    const double clr = dom.unit_clearance(y);
    if (!(clr > 0.0)) continue;
    const Complex overlap = hdot(y, xh);
    const CVec perp = y - overlap * xh;
    if (perp.norm() > 1e-8 && std::abs(overlap) > 1e-8) {
      CMat c(m, 2);
      c.col(0) = xh;
      c.col(1) = perp / std::abs(overlap);
      out.push_back(AnalyticDiscLift(std::move(c)).padded(p.family.degree));
    }
    if (perp.norm() > 1e-8) {
      const double eps = std::max(0.5 * clr, 1e-3);
      CMat c(m, 2);
      c.col(0) = xh;
      c.col(1) = y / eps;
      out.push_back(AnalyticDiscLift(std::move(c)).padded(p.family.degree));
    }
  }
  return out;
}

EnvelopeEstimate minimize(const EnvelopeProblem& p, const CandidateLibrary* library) {
  if (p.family.degree < 1) throw ConfigError("disc family degree must be >= 1");
  if (p.x.ambient_dim() != p.domain.ambient_dim()) throw ConfigError("point and domain dimensions differ");
  const CVec xh = lift(p.x);
  if (p.mode == EnvelopeMode::sz && std::abs(xh(0)) < 1e-14)
    throw ConfigError("sz mode needs a point of the affine chart z_0 != 0");

  const int degree = p.family.degree;
  const int nodes = p.optimizer.search_nodes > 0 ? p.optimizer.search_nodes : p.quadrature.nodes;
  const BoundaryGrid grid(nodes);
  const CMat powers = power_table(grid, degree);
  const ConeDomain dom = effective_domain(p);
  const double margin = p.family.margin;
  const double bound = p.family.coeff_bound;
  const int m = static_cast<int>(xh.size());

  auto score_coeffs = [&](const CMat& coeffs, const CMat& pw) {
    const CMat vals = coeffs * pw;
    const Eigen::VectorXd clr = dom.unit_clearances(vals);
    double viol = 0.0;
    for (Eigen::Index j = 0; j < clr.size(); ++j) {
      const double d = margin - clr(j);
      if (d > 0.0) viol += d * d;
    }
    if (viol > 0.0) return kInfeasibleScore + viol;
    const double v = value_from_boundary(p.mode, p.weight, vals, coeffs.col(0));
    if (!std::isfinite(v)) return kInfeasibleScore + 1.0;
    return v;
  };

  // Candidate witnesses: (search value, source, disc)
  struct Cand {
    double value;
    int order;
    std::string source;
    AnalyticDiscLift disc;
  };
  std::vector<Cand> cands;
  EnvelopeEstimate est;

  const auto score_disc = [&](const AnalyticDiscLift& d) {
    return score_coeffs(d.coeffs(), power_table(grid, d.degree()));
  };
  int order = 0;
  for (std::size_t i = 0; i < p.pool.size(); ++i) {
    auto d = normalize_centre(p.pool[i], xh);
    if (!d) continue;
    const double s = score_disc(*d);
    ++est.evaluations;
    if (s < kInfeasibleScore) {
      cands.push_back({s, order, "pool:" + std::to_string(i), *d});
      est.pool_best = std::min(est.pool_best, s);
    }
    ++order;
  }
  const std::vector<AnalyticDiscLift> warm = warm_starts(p);
  for (std::size_t i = 0; i < warm.size(); ++i) {
    const double s = score_disc(warm[i]);
    ++est.evaluations;
    if (s < kInfeasibleScore) {
      cands.push_back({s, order, "warm:" + std::to_string(i), warm[i]});
      est.pool_best = std::min(est.pool_best, s);
    }
    ++order;
  }

  // restart start points: pool discs of the family degree, then warm starts
  std::vector<Eigen::VectorXd> seeds;
  for (const auto& d : p.pool)
    if (auto n = normalize_centre(d, xh); n && n->degree() <= degree) seeds.push_back(flatten(*n, degree));
  for (const auto& d : warm) seeds.push_back(flatten(d, degree));

  const auto project_fn = [&](Eigen::VectorXd& v) {
    for (int k = 0; k < degree; ++k) {
      auto seg = v.segment(2 * m * k, 2 * m);
      const double n = seg.norm();
      if (n > bound) seg *= bound / n;
    }
  };
  const auto start_fn = [&](int index, std::mt19937_64& rng) -> Eigen::VectorXd {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto i = static_cast<std::size_t>(index);
    if (i < seeds.size()) return seeds[i];
    Eigen::VectorXd v(2 * m * degree);
    if (!seeds.empty() && index % 2 == 0) {
      v = seeds[i % seeds.size()];
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) += 0.3 * gauss(rng);
    } else {
      for (int k = 0; k < degree; ++k)
        for (int j = 0; j < 2 * m; ++j) v(2 * m * k + j) = gauss(rng) / (k + 1);
    }
    return v;
  };
  const auto score_fn = [&](const Eigen::VectorXd& v) { return score_coeffs(unflatten(xh, v, degree), powers); };

  LocalSearchConfig lcfg;
  lcfg.restarts = p.optimizer.restarts;
  lcfg.evaluations = p.optimizer.evaluations;
  lcfg.seed = p.optimizer.seed;
  lcfg.threads = p.optimizer.threads;
  const std::vector<RestartOutcome> runs = local_search(start_fn, score_fn, project_fn, lcfg);

  double running = est.pool_best;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    est.evaluations += runs[i].evaluations;
    const bool ok = runs[i].score < kInfeasibleScore;
    est.trace.push_back(ok ? runs[i].score : kInf);
    running = std::min(running, est.trace.back());
    est.best_so_far.push_back(running);
    if (ok)
      cands.push_back({runs[i].score, order, "restart:" + std::to_string(i),
                       AnalyticDiscLift(unflatten(xh, runs[i].best, degree))});
    ++order;
  }

  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.order < b.order;
  });
  for (const auto& c : cands) {
    if (!witness_feasible(p, c.disc, p.quadrature.nodes)) continue;
    double upper;
    try {
      upper = family_functional(p.mode, p.weight, c.disc, p.quadrature);
    } catch (const InfeasibleError&) {
      continue;
    }
    if (!std::isfinite(upper)) continue;
    est.found = true;
    est.upper = upper;
    est.witness = c.disc;
    est.witness_source = c.source;
    if (p.mode == EnvelopeMode::sz) {
      const double j = sz_functional(p.weight, c.disc, Route::jensen, p.quadrature).total;
      est.route_check = std::abs(j - upper);
    }
    break;
  }
  est.message = est.found ? "witness found" : "no witness found (not a claim that the envelope is +inf)";

  if (library) {
    const LowerBound lb = lower_bound(p.x, p.domain, p.weight, p.mode, *library);
    est.lower = lb.value;
    est.lower_candidate = lb.candidate;
    if (est.found && est.lower && std::isfinite(*est.lower)) {
      est.gap = est.upper - *est.lower;
      est.inconsistent = *est.lower > est.upper + 1e-6;
    }
  }
  return est;
}

std::vector<EnvelopeEstimate> envelope_grid(const std::vector<ProjPoint>& points, const EnvelopeProblem& base,
                                            const CandidateLibrary* library) {
  std::vector<EnvelopeEstimate> out;
  out.reserve(points.size());
  std::optional<AnalyticDiscLift> previous;
  for (const auto& x : points) {
    EnvelopeProblem p = base;
    p.x = x;
    if (previous) p.pool.push_back(previous->recentred(lift(x)));
    out.push_back(minimize(p, library));
    if (out.back().witness) previous = out.back().witness;
  }
  return out;
}

} // namespace discenv
