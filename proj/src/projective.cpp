#include "discenv/projective.hpp"

#include <algorithm>
#include <cmath>

namespace discenv {

CVec canonical_rep(const CVec& z) {
  const double n = z.norm();
  if (!(n >= 1e-100) || !std::isfinite(n)) throw ConfigError("cannot project the zero vector");
  CVec u = z / n;
  // leading coordinate: first one above rounding noise of a unit vector
  Eigen::Index lead = 0;
  while (lead + 1 < u.size() && std::abs(u(lead)) <= 1e-12) ++lead;
  const Complex phase = std::conj(u(lead)) / std::abs(u(lead));
  u *= phase;
  u(lead) = Complex{std::abs(u(lead)), 0.0};
  return u;
}

ProjPoint ProjPoint::from_homogeneous(const CVec& z) { return ProjPoint(canonical_rep(z)); }

ProjPoint ProjPoint::from_affine(const CVec& w) {
  CVec z(w.size() + 1);
  z(0) = 1.0;
  z.tail(w.size()) = w;
  return from_homogeneous(z);
}

CVec ProjPoint::affine() const {
  if (rep_.size() == 0 || rep_(0) == Complex{0.0, 0.0})
    throw ConfigError("point lies on the hyperplane at infinity");
  return rep_.tail(rep_.size() - 1) / rep_(0);
}

ProjPoint project(const CVec& z) { return ProjPoint::from_homogeneous(z); }

CVec lift(const ProjPoint& x) { return x.rep(); }

double fs_angle(const CVec& a, const CVec& b) {
  const double c = std::abs(hdot(a, b)) / (a.norm() * b.norm());
  return std::acos(std::clamp(c, 0.0, 1.0));
}

double fs_distance(const ProjPoint& p, const ProjPoint& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw ConfigError("fs_distance: dimension mismatch");
  return fs_angle(p.rep(), q.rep());
}

} // namespace discenv
