#pragma once

#include "discenv/common.hpp"

namespace discenv {

/// Point of P^n stored through its canonical unit representative: the first
/// nonzero coordinate is real and positive.
class ProjPoint {
public:
  ProjPoint() = default;

  static ProjPoint from_homogeneous(const CVec& z);
  /// The point [1 : w] of the affine chart z_0 != 0.
  static ProjPoint from_affine(const CVec& w);

  const CVec& rep() const { return rep_; }
  int ambient_dim() const { return static_cast<int>(rep_.size()); }
  /// Affine coordinates z_{1..n} / z_0; throws when z_0 == 0.
  CVec affine() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.rep_ == b.rep_; }

private:
  explicit ProjPoint(CVec rep) : rep_(std::move(rep)) {}
  CVec rep_;
};

/// pi: C^{n+1} \ {0} -> P^n. Throws ConfigError on (near) zero vectors.
ProjPoint project(const CVec& z);
/// Canonical unit representative of x.
CVec lift(const ProjPoint& x);

/// Canonical unit representative of z without building a ProjPoint.
CVec canonical_rep(const CVec& z);

/// Fubini-Study distance arccos |<p, q>| in [0, pi/2].
double fs_distance(const ProjPoint& p, const ProjPoint& q);
/// Same distance for arbitrary nonzero representatives.
double fs_angle(const CVec& a, const CVec& b);

} // namespace discenv
