#pragma once

#include "discenv/common.hpp"

#include <vector>

namespace discenv {

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootReport {
  std::vector<Root> roots;          // roots with |a| < 1
  bool centre_on_hyperplane = false; // p(0) == 0; the S-Z functional is +inf
  int total_multiplicity() const;
};

/// All roots of p (coefficients in increasing degree) with modulus < 1.
/// Companion-matrix eigenvalues, one Newton polish step, and clustering at
/// 1e-7 for multiplicities. Throws InfeasibleError when a root lies within
/// `boundary_margin` of the unit circle.
RootReport roots_in_unit_disc(const std::vector<Complex>& p, double boundary_margin = 1e-9);

/// All roots of p (with multiplicity clustering), no filtering.
std::vector<Root> polynomial_roots(const std::vector<Complex>& p);

/// Winding number of p around 0 along the unit circle, from accumulated
/// argument increments on `samples` equispaced nodes.
int winding_number(const std::vector<Complex>& p, int samples = 4096);

} // namespace discenv
