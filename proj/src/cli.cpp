#include "discenv/cli.hpp"

#include "discenv/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace discenv {

namespace {

using io::json;

struct Globals {
  int nodes = kDefaultNodes;
  int radial = kDefaultRadial;
  int angular = kDefaultAngular;
  std::uint64_t seed = 7;
  int threads = 0;
  std::string out;
};

json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_json(arg, "<inline>");
  return io::read_json_file(arg);
}

/// Raw cone vector, not normalized.
CVec cone_vector(const json& j) {
  if (j.is_object() && j.contains("homogeneous")) return io::vector_from_json(j.at("homogeneous"));
  if (j.is_object() && j.contains("affine")) {
    const CVec a = io::vector_from_json(j.at("affine"));
    CVec z(a.size() + 1);
    z(0) = 1.0;
    z.tail(a.size()) = a;
    return z;
  }
  return io::vector_from_json(j);
}

QuadratureSettings quadrature(const Globals& g) {
  if (g.nodes < 8 || g.radial < 2 || g.angular < 4) throw ConfigError("quadrature resolution too small");
  return {g.nodes, g.radial, g.angular};
}

json quadrature_json(const QuadratureSettings& q) {
  return {{"nodes", q.nodes}, {"radial", q.radial}, {"angular", q.angular}};
}

json base_config(const std::string& command, const Globals& g) {
  return {{"command", command}, {"quadrature", quadrature_json(quadrature(g))}, {"seed", g.seed}, {"out", g.out}};
}

std::string emit(const Globals& g, const std::string& fallback, const json& config, json result) {
  const std::string path = g.out.empty() ? fallback : g.out;
  json doc = {{"schema_version", io::kSchemaVersion}, {"config", config}, {"result", std::move(result)}};
  io::write_text_file(path, doc.dump(2) + "\n");
  std::cout << path << "\n";
  return path;
}

std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_point(const ProjPoint& p) {
  const CVec z = p.rep();
  std::string s;
  if (std::abs(z(0)) > 1e-300) {
    const CVec a = z.tail(z.size() - 1) / z(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (i) s += ";";
      s += fmt_real(a(i).real()) + (a(i).imag() < 0 ? "" : "+") + fmt_real(a(i).imag()) + "i";
    }
    return s;
  }
  s = "[";
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i) s += ";";
    s += fmt_real(z(i).real()) + (z(i).imag() < 0 ? "" : "+") + fmt_real(z(i).imag()) + "i";
  }
  return s + "]";
}

// ---- functional ----------------------------------------------------------

struct FunctionalOpts {
  std::string disc, weight, domain, route = "direct", kind = "omega";
};

int cmd_functional(const Globals& g, const FunctionalOpts& o) {
  const QuadratureSettings q = quadrature(g);
  const json dj = load_json(o.disc);
  const Weight phi = o.weight.empty() ? Weight::zero() : io::weight_from_json(load_json(o.weight));
  std::optional<ConeDomain> dom;
  if (!o.domain.empty()) dom = io::domain_from_json(load_json(o.domain));
  const Route route = route_from_string(o.route);
  const bool composite = dj.is_object() && dj.value("type", "") == "composite";

  if (!composite && !io::disc_from_json(dj).avoids_origin()) throw NumericalError("disc passes through the origin");
  FunctionalValue v;
  if (o.kind == "sz" || route == Route::jensen) {
    if (composite) throw ConfigError("the S-Z functional takes polynomial discs");
    v = sz_functional(phi, io::disc_from_json(dj), route, q, dom);
  } else if (o.kind == "omega") {
    auto eval = [&](const auto& disc) {
      if (route == Route::lifted) return omega_functional_lifted(lift_weight(phi, dom), disc, q);
      return omega_functional_direct(phi, disc, q, dom);
    };
    v = composite ? eval(io::composite_from_json(dj)) : eval(io::disc_from_json(dj));
  } else {
    throw ConfigError("unknown functional kind '" + o.kind + "'");
  }
  json cfg = base_config("functional eval", g);
  cfg["inputs"] = {{"disc", o.disc}, {"weight", o.weight}, {"domain", o.domain}};
  cfg["route"] = o.route;
  cfg["kind"] = o.kind;
  emit(g, "functional.json", cfg, io::functional_to_json(v));
  return 0;
}

// ---- identity-check ------------------------------------------------------

struct IdentityOpts {
  int discs = 100;
  int dim = 3;
  int degree = 6;
  double radius = 2.0;
  double min_norm = 0.25;
  double tol = 1e-8;
  int levels = 2;
};

int cmd_identity(const Globals& g, const IdentityOpts& o) {
  if (o.discs < 0 || o.levels < 1) throw ConfigError("identity-check: discs >= 0 and levels >= 1 required");
  const QuadratureSettings q0 = quadrature(g);
  std::mt19937_64 rng(mix_seed(g.seed, 0));
  std::vector<AnalyticDiscLift> discs;
  for (int i = 0; i < o.discs; ++i) discs.push_back(random_disc(o.dim, o.degree, o.radius, o.min_norm, rng));

  json table = json::array();
  std::vector<double> base_residuals(discs.size(), 0.0);
  QuadratureSettings q = q0;
  for (int level = 0; level < o.levels; ++level) {
    std::vector<double> eq(discs.size()), riesz(discs.size());
    parallel_for(static_cast<int>(discs.size()), g.threads, [&](int i) {
      const auto& d = discs[static_cast<std::size_t>(i)];
      eq[static_cast<std::size_t>(i)] = identity_check_eqH(Weight::zero(), d, q).residual;
      const double lhs = riesz_area_term(d, AreaQuadrature(q.radial, q.angular));
      const double rhs = std::log(d.centre().norm()) - boundary_log_norm_mean(d, BoundaryGrid(q.nodes));
      riesz[static_cast<std::size_t>(i)] = std::abs(lhs - rhs);
    });
    double max_eq = 0.0, max_riesz = 0.0;
    for (std::size_t i = 0; i < discs.size(); ++i) {
      max_eq = std::max(max_eq, eq[i]);
      max_riesz = std::max(max_riesz, riesz[i]);
    }
    if (level == 0) base_residuals = eq;
    table.push_back({{"quadrature", quadrature_json(q)}, {"max_identity_residual", max_eq}, {"max_riesz_residual", max_riesz}});
    std::cerr << "identity-check: level " << level << " nodes=" << q.nodes << " max residual " << max_eq << "\n";
    q = q.doubled();
  }

  std::size_t worst = 0;
  for (std::size_t i = 1; i < base_residuals.size(); ++i)
    if (base_residuals[i] > base_residuals[worst]) worst = i;
  const bool passed = std::all_of(base_residuals.begin(), base_residuals.end(), [&](double r) { return r <= o.tol; });

  json result = {{"discs", o.discs}, {"tolerance", o.tol}, {"passed", passed}, {"table", table}, {"residuals", base_residuals}};
  if (!passed) {
    result["worst_index"] = worst;
    result["worst_disc"] = io::disc_to_json(discs[worst]);
  }
  json cfg = base_config("identity-check", g);
  cfg["discs"] = o.discs;
  cfg["dimension"] = o.dim;
  cfg["max_degree"] = o.degree;
  cfg["coeff_radius"] = o.radius;
  cfg["min_norm"] = o.min_norm;
  cfg["tolerance"] = o.tol;
  cfg["levels"] = o.levels;
  emit(g, "identity-check.json", cfg, result);
  if (!passed) {
    std::cerr << "identity-check: residual " << base_residuals[worst] << " exceeds " << o.tol << "; worst disc:\n"
              << io::disc_to_json(discs[worst]).dump() << "\n";
    return 1;
  }
  return 0;
}

// ---- envelope / grid -----------------------------------------------------

struct EnvelopeOpts {
  std::string point, points, domain, weight, mode = "omega", pool;
  int degree = 6;
  int starts = 20;
  int evals = 2000;
  int search_nodes = 0;
  double bound = 10.0;
  double margin = 1e-3;
  bool no_lower = false;
};

void add_envelope_options(CLI::App* app, EnvelopeOpts& o) {
  app->add_option("--domain", o.domain, "domain JSON")->required();
  app->add_option("--weight", o.weight, "weight JSON (default: zero)");
  app->add_option("--mode", o.mode, "omega|sz")->capture_default_str();
  app->add_option("--degree", o.degree, "disc degree")->capture_default_str();
  app->add_option("--starts", o.starts, "optimizer restarts")->capture_default_str();
  app->add_option("--evals", o.evals, "evaluations per restart")->capture_default_str();
  app->add_option("--search-nodes", o.search_nodes, "boundary nodes during search (0: --nodes)");
  app->add_option("--bound", o.bound, "coefficient bound")->capture_default_str();
  app->add_option("--margin", o.margin, "boundary clearance margin")->capture_default_str();
  app->add_option("--pool", o.pool, "JSON array of warm-start discs");
  app->add_flag("--no-lower", o.no_lower, "skip the lower bound");
}

EnvelopeProblem envelope_problem(const Globals& g, const EnvelopeOpts& o) {
  if (o.degree < 1 || o.starts < 0 || o.evals < 1) throw ConfigError("envelope: degree >= 1, starts >= 0, evals >= 1 required");
  EnvelopeProblem p;
  p.mode = mode_from_string(o.mode);
  p.domain = io::domain_from_json(load_json(o.domain));
  p.weight = o.weight.empty() ? Weight::zero() : io::weight_from_json(load_json(o.weight));
  p.family = {o.degree, o.bound, o.margin};
  p.quadrature = quadrature(g);
  p.optimizer = {o.starts, o.evals, g.seed, o.search_nodes, g.threads};
  if (!o.pool.empty())
    for (const auto& d : load_json(o.pool)) p.pool.push_back(io::disc_from_json(d));
  return p;
}

json envelope_config(const std::string& command, const Globals& g, const EnvelopeOpts& o) {
  json cfg = base_config(command, g);
  cfg["inputs"] = {{"point", o.point}, {"points", o.points}, {"domain", o.domain}, {"weight", o.weight}, {"pool", o.pool}};
  cfg["mode"] = o.mode;
  cfg["optimizer"] = {{"degree", o.degree}, {"starts", o.starts}, {"evals", o.evals}, {"search_nodes", o.search_nodes},
                      {"bound", o.bound},   {"seed", g.seed}};
  cfg["tolerances"] = {{"margin", o.margin}};
  cfg["lower_bound"] = !o.no_lower;
  return cfg;
}

int cmd_envelope(const Globals& g, const EnvelopeOpts& o) {
  EnvelopeProblem p = envelope_problem(g, o);
  p.x = io::point_from_json(load_json(o.point));
  std::optional<CandidateLibrary> lib;
  if (!o.no_lower) lib = CandidateLibrary::standard(p.mode, p.x.ambient_dim());
  std::cerr << "envelope: " << o.starts << " restarts x " << o.evals << " evaluations, degree " << o.degree << "\n";
  const EnvelopeEstimate est = minimize(p, lib ? &*lib : nullptr);
  std::cerr << "envelope: " << est.message << "\n";
  emit(g, "envelope.json", envelope_config("envelope", g, o), io::envelope_to_json(est));
  return 0;
}

int cmd_grid(const Globals& g, const EnvelopeOpts& o, const std::string& command) {
  const EnvelopeProblem p = envelope_problem(g, o);
  const std::vector<ProjPoint> pts = io::points_from_json(load_json(o.points));
  if (pts.empty()) throw ConfigError("grid has no points");
  std::optional<CandidateLibrary> lib;
  if (!o.no_lower) lib = CandidateLibrary::standard(p.mode, pts.front().ambient_dim());
  std::cerr << command << ": " << pts.size() << " points\n";
  const std::vector<EnvelopeEstimate> est = envelope_grid(pts, p, lib ? &*lib : nullptr);

  std::ostringstream csv;
  json cfg = envelope_config(command, g, o);
  cfg["schema_version"] = io::kSchemaVersion;
  csv << "# " << cfg.dump() << "\n";
  csv << "point,upper,lower,gap,degree\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& e = est[i];
    csv << '"' << fmt_point(pts[i]) << '"' << ',' << (e.found ? fmt_real(e.upper) : "") << ','
        << (e.lower ? fmt_real(*e.lower) : "") << ',' << (e.gap ? fmt_real(*e.gap) : "") << ',' << o.degree << "\n";
  }
  const std::string path = g.out.empty() ? "grid.csv" : g.out;
  io::write_text_file(path, csv.str());
  std::cout << path << "\n";
  return 0;
}

// ---- hull ----------------------------------------------------------------

struct HullOpts {
  std::string point, set, deltas, disc;
  std::optional<double> lambda, c, rho;
  double eps = 0.01;
  double delta = 0.05;
  int degree = 6;
  int starts = 8;
  int evals = 1000;
  int search_nodes = 256;
  double r = 0.999;
};

void add_hull_search_options(CLI::App* app, HullOpts& o) {
  app->add_option("--point", o.point, "point JSON")->required();
  app->add_option("--set", o.set, "compact set JSON")->required();
  app->add_option("--degree", o.degree, "disc degree")->capture_default_str();
  app->add_option("--starts", o.starts, "optimizer restarts")->capture_default_str();
  app->add_option("--evals", o.evals, "evaluations per restart")->capture_default_str();
  app->add_option("--search-nodes", o.search_nodes, "boundary nodes during search")->capture_default_str();
}

HullSearchConfig hull_config(const Globals& g, const HullOpts& o) {
  HullSearchConfig c;
  c.family.degree = o.degree;
  c.optimizer = {o.starts, o.evals, g.seed, o.search_nodes, g.threads};
  c.quadrature = quadrature(g);
  return c;
}

json hull_base_config(const std::string& command, const Globals& g, const HullOpts& o) {
  json cfg = base_config(command, g);
  cfg["inputs"] = {{"point", o.point}, {"set", o.set}};
  cfg["optimizer"] = {{"degree", o.degree}, {"starts", o.starts}, {"evals", o.evals}, {"search_nodes", o.search_nodes},
                      {"seed", g.seed}};
  return cfg;
}

int cmd_hull_test(const Globals& g, const HullOpts& o) {
  const int given = (o.lambda ? 1 : 0) + (o.c ? 1 : 0) + (o.rho ? 1 : 0);
  if (given != 1) throw ConfigError("hull test: give exactly one of --lambda, --C, --rho");
  const LambdaCRho lcr = o.lambda ? lambda_c_rho(*o.lambda, HullQuantity::lambda)
                         : o.c    ? lambda_c_rho(*o.c, HullQuantity::c)
                                  : lambda_c_rho(*o.rho, HullQuantity::rho);
  const ProjPoint x = io::point_from_json(load_json(o.point));
  const CompactSetSpec k = io::compact_set_from_json(load_json(o.set));
  const HullResult res = hull_test(x, k, lcr.lambda, o.eps, o.delta, hull_config(g, o));
  for (const auto& w : res.warnings) std::cerr << "hull test: warning: " << w << "\n";
  std::cerr << "hull test: " << res.message << "\n";
  json result = io::hull_result_to_json(res);
  result["lambda"] = lcr.lambda;
  result["C"] = lcr.c;
  result["rho"] = lcr.rho;
  if (res.certificate) {
    const CertificateCheck chk = revalidate(*res.certificate, k);
    result["revalidation"] = {{"ok", chk.ok},
                              {"boundary_in_tube", chk.boundary_in_tube},
                              {"centre_ok", chk.centre_ok},
                              {"value_doubled", chk.value_doubled},
                              {"value_deviation", chk.value_deviation}};
  }
  json cfg = hull_base_config("hull test", g, o);
  cfg["lambda"] = lcr.lambda;
  cfg["tolerances"] = {{"epsilon", o.eps}, {"delta", o.delta}};
  emit(g, "hull-test.json", cfg, result);
  return 0;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse number '" + item + "'");
    }
  }
  return out;
}

int cmd_hull_schedule(const Globals& g, const HullOpts& o) {
  const ProjPoint x = io::point_from_json(load_json(o.point));
  const CompactSetSpec k = io::compact_set_from_json(load_json(o.set));
  const std::vector<double> deltas = parse_list(o.deltas);
  std::cerr << "hull schedule: " << deltas.size() << " tube radii\n";
  const ScheduleResult s = lambda_schedule(x, k, deltas, hull_config(g, o));
  json cfg = hull_base_config("hull schedule", g, o);
  cfg["deltas"] = deltas;
  emit(g, "hull-schedule.json", cfg, io::schedule_to_json(s));
  return 0;
}

int cmd_hull_normalize(const Globals& g, const HullOpts& o) {
  const AnalyticDiscLift f0 = io::disc_from_json(load_json(o.disc));
  const NormalizedDisc n = normalize_disc(f0, o.r, quadrature(g).nodes);
  json cfg = base_config("hull normalize", g);
  cfg["inputs"] = {{"disc", o.disc}};
  cfg["r"] = o.r;
  emit(g, "hull-normalize.json", cfg, io::normalized_to_json(n));
  return 0;
}

// ---- disc-structure ------------------------------------------------------

struct StructureOpts {
  std::string x, w, domain, weight;
  double eps = 1e-2;
  int directions = 32;
  int first_exponent = 0;
};

int cmd_structure_make(const Globals& g, const StructureOpts& o) {
  const ConeDomain dom = io::domain_from_json(load_json(o.domain));
  const StructureDiscParams p = make_structure_params(cone_vector(load_json(o.x)), cone_vector(load_json(o.w)), dom);
  const AnalyticDiscLift f = make_structure_disc(p);
  json result = {{"disc", io::disc_to_json(f)},
                 {"r", p.r},
                 {"distance", (p.x - p.w).norm()},
                 {"small_step", p.small_step},
                 {"feasibility", io::feasibility_to_json(verify_feasible(f, dom, quadrature(g).nodes))}};
  json cfg = base_config("disc-structure make", g);
  cfg["inputs"] = {{"x", o.x}, {"w", o.w}, {"domain", o.domain}};
  emit(g, "structure-disc.json", cfg, result);
  return 0;
}

int cmd_structure_epsilon(const Globals& g, const StructureOpts& o) {
  const ConeDomain dom = io::domain_from_json(load_json(o.domain));
  const Weight phi = o.weight.empty() ? Weight::zero() : io::weight_from_json(load_json(o.weight));
  EpsilonSearchConfig c;
  c.epsilon = o.eps;
  c.directions = o.directions;
  c.first_exponent = o.first_exponent;
  c.seed = g.seed;
  c.nodes = quadrature(g).nodes;
  const EpsilonWitness w = epsilon_upper_bound(cone_vector(load_json(o.x)), lift_weight(phi, dom), dom, c);
  std::cerr << "disc-structure epsilon-test: " << w.message << "\n";
  json cfg = base_config("disc-structure epsilon-test", g);
  cfg["inputs"] = {{"x", o.x}, {"domain", o.domain}, {"weight", o.weight}};
  cfg["tolerances"] = {{"epsilon", o.eps}};
  cfg["directions"] = o.directions;
  cfg["first_exponent"] = o.first_exponent;
  emit(g, "epsilon-witness.json", cfg, io::epsilon_witness_to_json(w));
  return w.success ? 0 : 2;
}

} // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Analytic-disc functionals and extremal-function estimates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--nodes", g.nodes, "boundary nodes N")->capture_default_str();
  app.add_option("--radial", g.radial, "radial area nodes")->capture_default_str();
  app.add_option("--angular", g.angular, "angular area nodes")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0: all cores)");
  app.add_option("--out", g.out, "output artifact path");

  std::function<int()> action;

  auto* functional = app.add_subcommand("functional", "evaluate a disc functional");
  functional->require_subcommand(1);
  FunctionalOpts fo;
  auto* feval = functional->add_subcommand("eval", "evaluate one disc");
  feval->add_option("--disc", fo.disc, "disc JSON")->required();
  feval->add_option("--weight", fo.weight, "weight JSON (default: zero)");
  feval->add_option("--domain", fo.domain, "domain JSON");
  feval->add_option("--route", fo.route, "direct|lifted|jensen")->capture_default_str();
  feval->add_option("--kind", fo.kind, "omega|sz")->capture_default_str();
  feval->callback([&] { action = [&] { return cmd_functional(g, fo); }; });

  IdentityOpts io_;
  auto* ident = app.add_subcommand("identity-check", "batch check of the lifting and Riesz identities");
  ident->add_option("--discs", io_.discs, "number of random discs")->capture_default_str();
  ident->add_option("--dim", io_.dim, "ambient dimension m")->capture_default_str();
  ident->add_option("--degree", io_.degree, "maximal degree")->capture_default_str();
  ident->add_option("--radius", io_.radius, "coefficient ball radius")->capture_default_str();
  ident->add_option("--min-norm", io_.min_norm, "rejection threshold for min |f|")->capture_default_str();
  ident->add_option("--tol", io_.tol, "residual tolerance")->capture_default_str();
  ident->add_option("--levels", io_.levels, "resolution levels (each doubles)")->capture_default_str();
  ident->callback([&] { action = [&] { return cmd_identity(g, io_); }; });

  EnvelopeOpts eo;
  auto* env = app.add_subcommand("envelope", "upper (and lower) estimate of the disc envelope at a point");
  add_envelope_options(env, eo);
  env->add_option("--point", eo.point, "point JSON");
  auto* env_grid = env->add_subcommand("grid", "envelope over a grid of points, CSV output");
  env_grid->add_option("--points", eo.points, "points JSON")->required();
  env->callback([&] {
    if (env_grid->parsed()) {
      action = [&] { return cmd_grid(g, eo, "envelope grid"); };
      return;
    }
    if (eo.point.empty()) throw CLI::RequiredError("--point");
    action = [&] { return cmd_envelope(g, eo); };
  });

  EnvelopeOpts go;
  auto* grid = app.add_subcommand("grid", "envelope over a grid of points, CSV output");
  add_envelope_options(grid, go);
  grid->add_option("--points", go.points, "points JSON")->required();
  grid->callback([&] { action = [&] { return cmd_grid(g, go, "grid"); }; });

  HullOpts ho;
  auto* hull = app.add_subcommand("hull", "projective hull membership");
  hull->require_subcommand(1);
  auto* htest = hull->add_subcommand("test", "search a certificate for x in the hull");
  add_hull_search_options(htest, ho);
  htest->add_option("--lambda", ho.lambda, "Lambda");
  htest->add_option("--C", ho.c, "C = exp(Lambda)");
  htest->add_option("--rho", ho.rho, "rho = exp(-Lambda)");
  htest->add_option("--eps", ho.eps, "epsilon")->capture_default_str();
  htest->add_option("--delta", ho.delta, "tube radius")->capture_default_str();
  htest->callback([&] { action = [&] { return cmd_hull_test(g, ho); }; });
  auto* hsched = hull->add_subcommand("schedule", "estimates over shrinking tubes");
  add_hull_search_options(hsched, ho);
  hsched->add_option("--deltas", ho.deltas, "comma separated, decreasing")->required();
  hsched->callback([&] { action = [&] { return cmd_hull_schedule(g, ho); }; });
  auto* hnorm = hull->add_subcommand("normalize", "normalize a disc to unit boundary norm");
  hnorm->add_option("--disc", ho.disc, "disc JSON")->required();
  hnorm->add_option("--r", ho.r, "radius in (0,1)")->capture_default_str();
  hnorm->callback([&] { action = [&] { return cmd_hull_normalize(g, ho); }; });

  StructureOpts so;
  auto* ds = app.add_subcommand("disc-structure", "degree-one structure discs");
  ds->require_subcommand(1);
  auto* dmake = ds->add_subcommand("make", "build f_{x,w}");
  dmake->add_option("--x", so.x, "centre (JSON)")->required();
  dmake->add_option("--w", so.w, "anchor in the cone (JSON)")->required();
  dmake->add_option("--domain", so.domain, "domain JSON")->required();
  dmake->callback([&] { action = [&] { return cmd_structure_make(g, so); }; });
  auto* deps = ds->add_subcommand("epsilon-test", "search w with H(f_{x,w}) <= phi~(x) + eps");
  deps->add_option("--x", so.x, "centre (JSON)")->required();
  deps->add_option("--domain", so.domain, "domain JSON")->required();
  deps->add_option("--weight", so.weight, "weight JSON (default: zero)");
  deps->add_option("--eps", so.eps, "epsilon")->capture_default_str();
  deps->add_option("--directions", so.directions, "directions per radius")->capture_default_str();
  deps->add_option("--first-exponent", so.first_exponent, "first radius 2^-k")->capture_default_str();
  deps->callback([&] { action = [&] { return cmd_structure_epsilon(g, so); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    return action ? action() : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const io::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace discenv
