#pragma once

#include "discenv/disc.hpp"

#include <initializer_list>

namespace testing {

using discenv::Complex;
using discenv::CVec;
using discenv::CMat;

inline CVec vec(std::initializer_list<Complex> xs) {
  CVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

/// Disc from its coefficient vectors c_0, c_1, ...
inline discenv::AnalyticDiscLift disc(std::initializer_list<CVec> cols) {
  const auto m = cols.begin()->size();
  CMat c(m, static_cast<Eigen::Index>(cols.size()));
  Eigen::Index k = 0;
  for (const auto& col : cols) c.col(k++) = col;
  return discenv::AnalyticDiscLift(c);
}

/// The disc t -> (1, t).
inline discenv::AnalyticDiscLift one_t() { return disc({vec({1.0, 0.0}), vec({0.0, 1.0})}); }

} // namespace testing
