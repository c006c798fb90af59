// Acceptance suite: one PASS/FAIL line per criterion.

#include "discenv/cli.hpp"
#include "discenv/disc_structure.hpp"
#include "discenv/envelope.hpp"
#include "discenv/functionals.hpp"
#include "discenv/hull.hpp"
#include "discenv/io.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace discenv;
namespace fs = std::filesystem;

namespace {

const double kLog2 = std::log(2.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

CVec vec2(Complex a, Complex b) {
  CVec v(2);
  v << a, b;
  return v;
}

fs::path workdir() {
  const fs::path d = fs::temp_directory_path() / "discenv_acceptance";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "discenv");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream sink;
  auto* old_out = std::cout.rdbuf(sink.rdbuf());
  auto* old_err = std::cerr.rdbuf(sink.rdbuf());
  const int code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return code;
}

CompactSetSpec circle_k() { return CompactSetSpec::circle(1.0, 256); }

std::string circle_json(int n) {
  std::ostringstream s;
  s.precision(17);
  s << "{\"name\": \"circle\", \"connected\": true, \"samples\": [";
  for (int j = 0; j < n; ++j) {
    const auto& z = circle_k().samples[j].affine();
    s << (j ? "," : "") << "{\"affine\": [[" << z(0).real() << "," << z(0).imag() << "]]}";
  }
  s << "]}";
  return s.str();
}

// shared by criteria 7, 8 and 10
std::optional<HullCertificate> g_certificate;

std::vector<std::string> siciak_args(const std::string& out) {
  return {"envelope", "--point", write("siciak_x.json", R"({"affine": [[2, 0]]})"), "--domain",
          write("siciak_w.json", R"({"type": "fs_ball", "affine_radius": 1.0})"), "--mode", "sz", "--out", out};
}

std::vector<std::string> hull_args(const std::string& out) {
  return {"hull", "test", "--point", write("hull_x.json", R"({"homogeneous": [[1,0],[0,0]]})"), "--set",
          write("circle.json", circle_json(256)), "--lambda", "0.5", "--out", out};
}

Outcome identity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(mix_seed(7, 0));
  const QuadratureSettings q{2048, 256, 512};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto d = random_disc(3, 6, 2.0, 0.25, rng);
    worst = std::max(worst, identity_check_eqH(Weight::zero(), d, q).residual);
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-8 && t <= 60.0, "max residual " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome riesz() {
  std::mt19937_64 rng(mix_seed(7, 1));
  double worst_default = 0.0, worst_doubled = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto d = random_disc(3, 6, 2.0, 0.25, rng);
    auto err = [&](const QuadratureSettings& q) {
      const double rhs = std::log(d.centre().norm()) - boundary_log_norm_mean(d, BoundaryGrid(q.nodes));
      return std::abs(riesz_area_term(d, AreaQuadrature(q.radial, q.angular)) - rhs);
    };
    worst_default = std::max(worst_default, err(QuadratureSettings{}));
    worst_doubled = std::max(worst_doubled, err(QuadratureSettings{}.doubled()));
  }
  return {worst_default <= 1e-6 && worst_doubled <= 1e-8,
          "default " + fmt(worst_default) + ", doubled " + fmt(worst_doubled)};
}

Outcome jensen_direct() {
  std::mt19937_64 rng(mix_seed(7, 2));
  std::uniform_real_distribution<double> rad(0.0, 1.8), ang(0.0, 2 * kPi);
  std::uniform_int_distribution<int> deg(1, 8);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = deg(rng);
    std::vector<Complex> p = {1.0};
    for (int k = 0; k < d; ++k) {
      double r;
      do r = rad(rng);
      while (std::abs(r - 1.0) < 1e-3);
      const Complex a = std::polar(r, ang(rng));
      std::vector<Complex> next(p.size() + 1, 0.0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j] -= a * p[j];
        next[j + 1] += p[j];
      }
      p = next;
    }
    CMat c = CMat::Zero(2, static_cast<Eigen::Index>(p.size()));
    for (std::size_t j = 0; j < p.size(); ++j) c(0, static_cast<Eigen::Index>(j)) = p[j];
    c(1, 0) = 1.0;
    const AnalyticDiscLift f(c);
    const double jn = sz_functional(Weight::zero(), f, Route::jensen).interior_term;
    const double dr = sz_functional(Weight::zero(), f, Route::direct).interior_term;
    worst = std::max(worst, std::abs(jn - dr));
  }
  return {worst <= 1e-9, "max |jensen - direct| " + fmt(worst)};
}

Outcome lift_scaling() {
  std::mt19937_64 rng(mix_seed(7, 3));
  const HomPoly p = HomPoly::make(3, {{1.0, {1, 0, 0}}, {0.3, {0, 1, 0}}, {Complex(0, 0.2), {0, 0, 1}}});
  const auto phi = lift_weight(Weight::log_poly(p));
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto d = random_disc(3, 6, 2.0, 0.25, rng);
    const Complex lam = std::polar(std::exp(u(rng)), u(rng));
    const double a = poisson_functional(phi, d).total;
    const double b = poisson_functional(phi, d.scaled(lam)).total;
    worst = std::max(worst, std::abs(b - a - std::log(std::abs(lam))));
  }
  return {worst <= 1e-12, "max deviation " + fmt(worst)};
}

Outcome structure() {
  CVec a(3);
  a << 0.0, 0.0, 1.0;
  const auto dom = ConeDomain::hyperplane_complement(a);
  std::mt19937_64 rng(mix_seed(7, 4));
  int pairs = 0, feasible = 0;
  double worst_identity = 0.0;
  while (pairs < 50) {
    const CVec x = random_unit_vector(3, rng) * 2.0;
    const CVec w = random_unit_vector(3, rng);
    if (dom.unit_clearance(w) < 1e-2 || !dom.contains(x) || (x - w).norm() < 1e-3) continue;
    ++pairs;
    const auto p = make_structure_params(x, w, dom);
    const auto f = make_structure_disc(p);
    worst_identity = std::max(worst_identity, (f.value(0.0) - x).norm());
    const BoundaryGrid grid(64);
    for (int j = 0; j < grid.size(); ++j)
      worst_identity = std::max(worst_identity, std::abs((w - structure_bracket(p, grid.node(j))).norm() - p.r));
    if (verify_feasible(f, dom).feasible) ++feasible;
  }
  const auto phi = lift_weight(Weight::zero(), dom);
  int eps_ok = 0;
  for (int i = 0; i < 20; ++i) {
    CVec x = random_unit_vector(3, rng) * 1.5;
    if (dom.unit_clearance(x) < 1e-2) x(2) += 0.5;
    EpsilonSearchConfig cfg;
    cfg.epsilon = 1e-2;
    const auto wit = epsilon_upper_bound(x, phi, dom, cfg);
    if (wit.success && wit.value <= phi(x) + cfg.epsilon) ++eps_ok;
  }
  return {feasible == 50 && worst_identity <= 1e-12 && eps_ok == 20,
          std::to_string(feasible) + "/50 feasible, identity " + fmt(worst_identity) + ", epsilon " +
              std::to_string(eps_ok) + "/20"};
}

Outcome siciak() {
  const auto out = (workdir() / "siciak.json").string();
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli(siciak_args(out));
  const double t = seconds_since(t0);
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  const auto r = io::parse_json(slurp(out))["result"];
  const double up = r["upper"].get<double>();
  const double lo = r["lower"].get<double>();
  const double gap = r["gap"].get<double>();
  const bool ok = up >= kLog2 - 1e-9 && up <= kLog2 + 5e-2 && std::abs(lo - kLog2) <= 1e-12 && gap <= 5e-2 && t <= 120.0;
  return {ok, "upper " + fmt(up) + ", lower " + fmt(lo) + ", gap " + fmt(gap) + ", " + fmt(t) + " s"};
}

Outcome hull() {
  const auto k = circle_k();
  const ProjPoint x = project(vec2(1.0, 0.0));
  const auto res = hull_test(x, k, 0.5, 0.01, 0.05);
  if (!res.certified) return {false, "no certificate: " + res.message};
  g_certificate = res.certificate;
  const double v = res.certificate->value;
  const bool valid = revalidate(*res.certificate, k).ok;
  const auto s = lambda_schedule(x, k, {0.3, 0.1, 0.03});
  bool mono = true;
  for (std::size_t i = 1; i < s.estimates.size(); ++i) mono = mono && s.estimates[i] >= s.estimates[i - 1] - 1e-6;
  std::string est;
  for (double e : s.estimates) est += (est.empty() ? "" : " ") + fmt(e);
  return {v <= 0.5 * kLog2 + 1e-6 && valid && mono,
          "certificate " + fmt(v) + (valid ? " (revalidated)" : " (revalidation failed)") + ", schedule " + est};
}

Outcome normalization() {
  CMat c(2, 2);
  c << 1.0, 0.5, 0.0, 1.0;
  const AnalyticDiscLift f(c);
  double prev = kInf;
  bool mono = true;
  std::string devs;
  for (double r : {0.9, 0.99, 0.999}) {
    const double d = normalize_disc(f, r, 4096).max_boundary_deviation;
    mono = mono && d <= prev;
    prev = d;
    devs += (devs.empty() ? "" : " ") + fmt(d);
  }
  if (!g_certificate) return {false, "criterion 7 certificate unavailable"};
  const auto rep = b_to_bprime(*g_certificate, circle_k(), 0.1, 0.999);
  return {mono && prev <= 1e-3 && rep.bound_holds,
          "deviations " + devs + ", -log|p| " + fmt(rep.centre_bound_lhs) + " <= " + fmt(rep.centre_bound_rhs)};
}

Outcome monotonicity() {
  const ProjPoint x = project(vec2(1.0, 1.0));
  const ProjPoint c = project(vec2(1.0, 0.0));
  auto problem = [&](double radius) {
    EnvelopeProblem p;
    p.mode = EnvelopeMode::omega;
    p.x = x;
    p.domain = ConeDomain::fs_ball(c, radius);
    p.family = {4, 10.0, 1e-3};
    p.optimizer = {6, 600, 7, 256, 0};
    return p;
  };
  bool ok = true;
  std::string detail = "domain";
  std::vector<AnalyticDiscLift> pool;
  double prev = -kInf;
  for (double radius : {kPi / 4 + 0.05, kPi / 5, kPi / 6}) {
    auto p = problem(radius);
    p.pool = pool;
    const auto e = minimize(p);
    if (!e.found) return {false, "no feasible disc at radius " + fmt(radius)};
    ok = ok && e.upper >= prev - 1e-6;
    prev = e.upper;
    pool.push_back(*e.witness);
    detail += " " + fmt(e.upper);
  }

  auto hi = problem(kPi / 5);
  hi.weight = Weight::constant(0.3);
  const auto e_hi = minimize(hi);
  auto lo = problem(kPi / 5);
  lo.pool = {*e_hi.witness};
  const auto e_lo = minimize(lo);
  ok = ok && e_lo.upper <= e_hi.upper + 1e-6;
  detail += "; weight " + fmt(e_lo.upper) + " <= " + fmt(e_hi.upper);

  auto d2 = problem(kPi / 5);
  d2.family.degree = 2;
  const auto e2 = minimize(d2);
  auto d4 = problem(kPi / 5);
  d4.pool = {*e2.witness};
  const auto e4 = minimize(d4);
  ok = ok && e4.upper <= e2.upper + 1e-12;
  detail += "; degree " + fmt(e4.upper) + " <= " + fmt(e2.upper);
  return {ok, detail};
}

Outcome determinism() {
  bool ok = true;
  std::string detail;
  for (const auto& [name, make] :
       std::vector<std::pair<std::string, std::function<std::vector<std::string>(const std::string&)>>>{
           {"envelope", siciak_args}, {"hull", hull_args}}) {
    const auto out = (workdir() / (name + "_repeat.json")).string();
    if (cli(make(out)) != 0) return {false, name + " run failed"};
    const auto first = slurp(out);
    if (cli(make(out)) != 0) return {false, name + " run failed"};
    const bool same = slurp(out) == first;
    ok = ok && same;
    detail += (detail.empty() ? "" : ", ") + name + (same ? " identical" : " differs");
  }
  return {ok, detail};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity residual on random discs", identity},
      {"Riesz identity", riesz},
      {"Jensen vs direct S-Z route", jensen_direct},
      {"lift scaling", lift_scaling},
      {"structure discs and epsilon search", structure},
      {"one-dimensional Siciak envelope", siciak},
      {"hull certificate and schedule", hull},
      {"disc normalization", normalization},
      {"monotonicity suite", monotonicity},
      {"determinism of artifacts", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
