#include "helpers.hpp"

#include "discenv/envelope.hpp"
#include "discenv/functionals.hpp"

#include <doctest.h>

#include <cmath>

using namespace discenv;
using namespace testing;

namespace {

const double kLog2 = std::log(2.0);

EnvelopeProblem small_problem(EnvelopeMode mode, const ProjPoint& x, const ConeDomain& dom) {
  EnvelopeProblem p;
  p.mode = mode;
  p.x = x;
  p.domain = dom;
  p.family = {3, 10.0, 1e-3};
  p.optimizer = {4, 400, 7, 256, 0};
  return p;
}

EnvelopeProblem siciak(double x) {
  return small_problem(EnvelopeMode::sz, ProjPoint::from_affine(vec({x})), ConeDomain::affine_ball(1, 1.0));
}

} // namespace

TEST_CASE("points of W are handled by the constant disc") {
  const auto dom = ConeDomain::fs_ball(project(vec({1.0, 0.0})), 0.6);
  auto p = small_problem(EnvelopeMode::omega, project(vec({1.0, 0.2})), dom);
  const auto e = minimize(p);
  REQUIRE(e.found);
  CHECK(e.upper <= 1e-9);

  p.weight = Weight::constant(0.4);
  CHECK(minimize(p).upper <= 0.4 + 1e-9);
}

TEST_CASE("one-dimensional Siciak case") {
  const auto lib = CandidateLibrary::standard(EnvelopeMode::sz, 2);
  const auto e = minimize(siciak(2.0), &lib);
  REQUIRE(e.found);
  CHECK(e.upper >= kLog2 - 1e-9);
  CHECK(e.upper <= kLog2 + 5e-2);
  REQUIRE(e.lower);
  CHECK(std::abs(*e.lower - kLog2) < 1e-12);
  CHECK(e.lower_candidate == "log+|w|");
  REQUIRE(e.gap);
  CHECK(*e.gap <= 5e-2);
  CHECK_FALSE(e.inconsistent);
  REQUIRE(e.route_check);
  CHECK(*e.route_check < 1e-9);
}

TEST_CASE("explicit near-optimal discs of the Siciak case") {
  // f_a(t) = -2a / g_a(t) with g_a(t) = (t - a)/(1 - conj(a) t), written homogeneously
  for (double a : {0.3, 0.45, 0.499}) {
    const auto f = disc({vec({-a, -2 * a}), vec({1.0, 2 * a * a})});
    const auto v = sz_functional(Weight::zero(), f, Route::direct);
    CHECK(std::abs(v.total + std::log(a)) < 1e-12);
  }
}

TEST_CASE("witness and trace contracts") {
  const auto p = siciak(3.0);
  const auto e = minimize(p);
  REQUIRE(e.found);
  REQUIRE(e.witness);
  CHECK((e.witness->centre() - lift(p.x)).norm() <= 1e-12);
  CHECK(witness_feasible(p, *e.witness, p.quadrature.nodes));
  CHECK(std::abs(family_functional(p.mode, p.weight, *e.witness, p.quadrature) - e.upper) == 0.0);
  CHECK(std::abs(family_functional(p.mode, p.weight, *e.witness, p.quadrature.doubled()) - e.upper) <= 1e-6);
  for (std::size_t i = 1; i < e.best_so_far.size(); ++i) CHECK(e.best_so_far[i] <= e.best_so_far[i - 1]);
  CHECK(std::abs(e.best_so_far.back() - e.upper) < 1e-9);
  CHECK(e.trace.size() == static_cast<std::size_t>(p.optimizer.restarts));
}

TEST_CASE("omega mode upper bound is sound at doubled resolution") {
  const auto dom = ConeDomain::fs_ball(project(vec({1.0, 0.0})), kPi / 4);
  const auto p = small_problem(EnvelopeMode::omega, project(vec({1.0, 1.5})), dom);
  const auto e = minimize(p);
  REQUIRE(e.found);
  CHECK(e.upper >= 0.0);
  const auto again = omega_functional_direct(Weight::zero(), *e.witness, p.quadrature.doubled(), effective_domain(p));
  CHECK(std::abs(again.total - e.upper) <= 1e-6);
}

TEST_CASE("domain monotonicity on nested balls") {
  const ProjPoint x = project(vec({1.0, 1.0}));
  std::vector<AnalyticDiscLift> pool;
  double prev = -kInf;
  for (double radius : {kPi / 4 + 0.05, kPi / 5, kPi / 6}) {
    // shrinking domain: the estimate can only grow
    auto p = small_problem(EnvelopeMode::omega, x, ConeDomain::fs_ball(project(vec({1.0, 0.0})), radius));
    p.pool = pool;
    const auto e = minimize(p);
    REQUIRE(e.found);
    CHECK(e.upper >= prev - 1e-6);
    prev = e.upper;
    pool.push_back(*e.witness);
  }
}

TEST_CASE("weight and degree monotonicity") {
  const auto dom = ConeDomain::fs_ball(project(vec({1.0, 0.0})), kPi / 5);
  const ProjPoint x = project(vec({1.0, 1.0}));
  auto hi = small_problem(EnvelopeMode::omega, x, dom);
  hi.weight = Weight::constant(0.3);
  const auto e_hi = minimize(hi);
  auto lo = hi;
  lo.weight = Weight::zero();
  lo.pool = {*e_hi.witness};
  const auto e_lo = minimize(lo);
  CHECK(e_lo.upper <= e_hi.upper + 1e-6);

  auto d2 = lo;
  d2.family.degree = 2;
  const auto e2 = minimize(d2);
  auto d4 = lo;
  d4.family.degree = 4;
  d4.pool = {*e2.witness};
  CHECK(minimize(d4).upper <= e2.upper + 1e-12);
}

TEST_CASE("lower_bound examples") {
  const auto dom = ConeDomain::fs_ball(project(vec({1.0, 0.0})), 0.5);
  CandidateLibrary only_zero;
  only_zero.candidates = {{Candidate::Kind::constant, "zero", std::nullopt, 0.0}};
  const auto lb0 = lower_bound(project(vec({1.0, 0.1})), dom, Weight::zero(), EnvelopeMode::omega, only_zero);
  CHECK(lb0.value == 0.0);
  CHECK(lb0.candidate == "zero");

  CandidateLibrary logplus;
  logplus.candidates = {{Candidate::Kind::log_plus, "log+", std::nullopt, std::nullopt}};
  const auto lb1 = lower_bound(ProjPoint::from_affine(vec({Complex(0, 2)})), ConeDomain::affine_ball(1, 1.0),
                               Weight::zero(), EnvelopeMode::sz, logplus);
  CHECK(std::abs(lb1.value - kLog2) < 1e-12);

  CandidateLibrary bad;
  bad.candidates = {{Candidate::Kind::constant, "too-high", std::nullopt, 1.0},
                    {Candidate::Kind::constant, "zero", std::nullopt, 0.0}};
  const auto lb2 = lower_bound(project(vec({1.0, 0.1})), dom, Weight::zero(), EnvelopeMode::omega, bad);
  CHECK(lb2.candidate == "zero");
  REQUIRE(lb2.excluded.size() == 1);
  CHECK(lb2.excluded[0] == "too-high");
}

TEST_CASE("envelope_grid") {
  const auto base = siciak(2.0);
  const auto lib = CandidateLibrary::standard(EnvelopeMode::sz, 2);
  const auto one = envelope_grid({base.x}, base, &lib);
  const auto direct = minimize(base, &lib);
  REQUIRE(one.size() == 1);
  CHECK(one[0].upper == direct.upper);
  CHECK(*one[0].lower == *direct.lower);

  std::vector<ProjPoint> radial;
  for (double r : {1.5, 2.0, 3.0, 5.0}) radial.push_back(ProjPoint::from_affine(vec({r})));
  const auto rg = envelope_grid(radial, base, &lib);
  for (std::size_t i = 1; i < rg.size(); ++i) CHECK(rg[i].upper >= rg[i - 1].upper);
  for (std::size_t i = 0; i < rg.size(); ++i) CHECK(rg[i].upper <= std::log(std::abs(radial[i].affine()(0))) + 5e-2);

  std::vector<ProjPoint> inside;
  for (double r : {0.0, 0.3, 0.6}) inside.push_back(ProjPoint::from_affine(vec({Complex(r, -r / 2)})));
  for (const auto& e : envelope_grid(inside, base)) CHECK(e.upper <= 1e-9);
}

TEST_CASE("minimize is deterministic and independent of the thread count") {
  auto p = siciak(2.5);
  p.optimizer.threads = 1;
  const auto a = minimize(p);
  p.optimizer.threads = 4;
  const auto b = minimize(p);
  CHECK(a.upper == b.upper);
  CHECK(a.trace == b.trace);
  CHECK(a.witness->coeffs() == b.witness->coeffs());
}

TEST_CASE("configuration errors") {
  auto p = siciak(2.0);
  p.family.degree = 0;
  CHECK_THROWS_AS(minimize(p), ConfigError);
  auto q = siciak(2.0);
  q.x = project(vec({0.0, 1.0}));
  CHECK_THROWS_AS(minimize(q), ConfigError);
  CHECK_THROWS_AS(mode_from_string("nope"), ConfigError);
}
