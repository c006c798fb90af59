#include "discenv/optimizer.hpp"

#include "discenv/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace discenv {

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

RestartOutcome run_restart(int index, const StartFn& start, const ScoreFn& score, const ProjectFn& project,
                           const LocalSearchConfig& cfg) {
  std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Eigen::VectorXd x = start(index, rng);
  project(x);
  const Eigen::Index dim = x.size();
  RestartOutcome out;
  double fx = score(x);
  out.evaluations = 1;
  if (dim == 0) {
    out.best = x;
    out.score = fx;
    return out;
  }

  const double scale = std::max(1.0, x.norm() / std::sqrt(static_cast<double>(dim)));
  double step = cfg.initial_step * scale;
  Eigen::VectorXd last_move = Eigen::VectorXd::Zero(dim);
  Eigen::Index coord = 0;
  const double grow = std::exp(1.0 / 3.0);
  const double shrink = std::exp(-1.0 / 12.0);

  while (out.evaluations < cfg.evaluations) {
    Eigen::VectorXd y = x;
    const int kind = out.evaluations % 5;
    if (kind == 3) {
      y(coord) += (unif(rng) < 0.5 ? -step : step) * std::sqrt(static_cast<double>(dim));
      coord = (coord + 1) % dim;
    } else if (kind == 4 && last_move.squaredNorm() > 0.0) {
      y += last_move * (0.5 + unif(rng));
    } else {
      for (Eigen::Index i = 0; i < dim; ++i) y(i) += step * gauss(rng);
    }
    project(y);
    const double fy = score(y);
    ++out.evaluations;
    if (fy < fx) {
      last_move = y - x;
      x = std::move(y);
      fx = fy;
      step *= grow;
    } else {
      step *= shrink;
      if (kind == 4) last_move *= 0.5;
    }
    if (step < cfg.min_step * scale) step = 0.1 * cfg.initial_step * scale;
  }
  out.best = std::move(x);
  out.score = fx;
  return out;
}

} // namespace

std::vector<RestartOutcome> local_search(const StartFn& start, const ScoreFn& score, const ProjectFn& project,
                                         const LocalSearchConfig& cfg) {
  std::vector<RestartOutcome> results(static_cast<std::size_t>(std::max(cfg.restarts, 0)));
  parallel_for(cfg.restarts, cfg.threads, [&](int i) {
    results[static_cast<std::size_t>(i)] = run_restart(i, start, score, project, cfg);
  });
  return results;
}

} // namespace discenv
