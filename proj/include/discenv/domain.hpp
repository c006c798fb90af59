#pragma once

#include "discenv/common.hpp"
#include "discenv/projective.hpp"

#include <random>
#include <vector>

namespace discenv {

/// Open complex cone in C^{n+1} \ {0}, equivalently an open set of P^n.
///
/// Every descriptor exposes a signed, scale-invariant clearance c(z): for
/// unit z, c(z) > 0 iff z lies in the cone, and for z inside, |z| c(z) is a
/// lower bound for the Euclidean distance from z to the complement.
///   tube / fs_ball: sin(delta - theta) where theta is the Fubini-Study
///                   distance to the nearest centre (exact for one centre);
///   hyperplane_complement {l(z) != 0}: |l(z)| / |l| (exact);
///   intersection: minimum over members.
class ConeDomain {
public:
  enum class Kind { tube, fs_ball, hyperplane_complement, intersection };

  ConeDomain() = default;

  static ConeDomain tube(std::vector<ProjPoint> samples, double delta);
  static ConeDomain fs_ball(const ProjPoint& centre, double radius);
  /// The cone over {l(z) = sum_i a_i z_i != 0}.
  static ConeDomain hyperplane_complement(CVec normal);
  static ConeDomain intersection(std::vector<ConeDomain> members);
  /// Cone over the affine ball {|w| < R} of the chart z_0 != 0 in C^n.
  static ConeDomain affine_ball(int n, double radius);

  Kind kind() const { return kind_; }
  int ambient_dim() const { return dim_; }
  double radius() const { return radius_; }
  const std::vector<CVec>& centres() const { return centres_; }
  const CVec& normal() const { return normal_; }
  const std::vector<ConeDomain>& members() const { return members_; }

  double unit_clearance(const CVec& z) const;
  /// Column-wise clearances of the columns of z.
  Eigen::VectorXd unit_clearances(const CMat& z) const;
  bool contains(const CVec& z) const;
  /// Lower bound for the Euclidean distance from z to the complement.
  double dist_lb(const CVec& z) const;

  /// Unit vectors drawn from the cone (rejection sampled where needed).
  std::vector<CVec> sample(int count, std::mt19937_64& rng) const;
  /// Unit vectors from the closure; about half lie on the boundary.
  std::vector<CVec> sample_closure(int count, std::mt19937_64& rng) const;

private:
  Kind kind_ = Kind::fs_ball;
  int dim_ = 0;
  double radius_ = 0.0;
  std::vector<CVec> centres_; // unit representatives
  CMat centre_matrix_;        // centres as columns
  CVec normal_;
  std::vector<ConeDomain> members_;
};

/// Uniformly distributed unit vector in C^m.
CVec random_unit_vector(int m, std::mt19937_64& rng);

} // namespace discenv
