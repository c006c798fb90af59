#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace discenv {

struct LocalSearchConfig {
  int restarts = 20;
  int evaluations = 2000; // per restart
  std::uint64_t seed = 7;
  double initial_step = 0.25;
  double min_step = 1e-9;
  int threads = 0; // 0: hardware concurrency
};

struct RestartOutcome {
  Eigen::VectorXd best;
  double score = 0.0;
  int evaluations = 0;
};

/// Start point of restart `index`, drawn from `rng` when random.
using StartFn = std::function<Eigen::VectorXd(int index, std::mt19937_64& rng)>;
/// Score to minimize; must be thread-safe.
using ScoreFn = std::function<double(const Eigen::VectorXd&)>;
/// Maps a proposal back into the admissible box/ball.
using ProjectFn = std::function<void(Eigen::VectorXd&)>;

/// Derivative-free stochastic local search with restarts. Each restart owns
/// a generator seeded from (seed, restart index) and mixes three proposal
/// kinds: isotropic Gaussian steps, single-coordinate steps, and pattern
/// moves along the last accepted displacement. The step length follows a
/// one-fifth success rule and is re-inflated when it collapses.
/// Restarts run on a thread pool; results are returned in restart order,
/// so the outcome does not depend on scheduling.
std::vector<RestartOutcome> local_search(const StartFn& start, const ScoreFn& score, const ProjectFn& project,
                                         const LocalSearchConfig& cfg);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace discenv
