#include "discenv/domain.hpp"

#include <algorithm>
#include <cmath>

namespace discenv {

CVec random_unit_vector(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVec z(m);
  for (;;) {
    for (int i = 0; i < m; ++i) z(i) = Complex{gauss(rng), gauss(rng)};
    const double n = z.norm();
    if (n > 1e-8) return z / n;
  }
}

ConeDomain ConeDomain::tube(std::vector<ProjPoint> samples, double delta) {
  if (samples.empty()) throw ConfigError("tube needs at least one sample");
  if (!(delta > 0.0)) throw ConfigError("tube radius must be positive");
  ConeDomain d;
  d.kind_ = Kind::tube;
  d.dim_ = samples.front().ambient_dim();
  d.radius_ = delta;
  d.centre_matrix_.resize(d.dim_, static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].ambient_dim() != d.dim_) throw ConfigError("tube samples have mixed dimensions");
    d.centres_.push_back(samples[i].rep());
    d.centre_matrix_.col(static_cast<Eigen::Index>(i)) = samples[i].rep();
  }
  return d;
}

ConeDomain ConeDomain::fs_ball(const ProjPoint& centre, double radius) {
  ConeDomain d = tube({centre}, radius);
  d.kind_ = Kind::fs_ball;
  return d;
}

ConeDomain ConeDomain::hyperplane_complement(CVec normal) {
  if (normal.size() < 2) throw ConfigError("hyperplane complement needs dimension >= 2");
  if (!(normal.norm() > 0.0)) throw ConfigError("hyperplane normal must be nonzero");
  ConeDomain d;
  d.kind_ = Kind::hyperplane_complement;
  d.dim_ = static_cast<int>(normal.size());
  d.normal_ = std::move(normal);
  return d;
}

ConeDomain ConeDomain::intersection(std::vector<ConeDomain> members) {
  if (members.empty()) throw ConfigError("intersection needs at least one member");
  ConeDomain d;
  d.kind_ = Kind::intersection;
  d.dim_ = members.front().dim_;
  for (const auto& m : members)
    if (m.dim_ != d.dim_) throw ConfigError("intersection members have mixed dimensions");
  d.members_ = std::move(members);
  return d;
}

ConeDomain ConeDomain::affine_ball(int n, double radius) {
  if (n < 1 || !(radius > 0.0)) throw ConfigError("affine ball needs n >= 1 and positive radius");
  CVec e0 = CVec::Zero(n + 1);
  e0(0) = 1.0;
  return fs_ball(project(e0), std::atan(radius));
}

namespace {

double angular_clearance(double delta, double theta) {
  return std::sin(std::clamp(delta - theta, -kPi / 2, kPi / 2));
}

} // namespace

double ConeDomain::unit_clearance(const CVec& z) const {
  if (z.size() != dim_) throw ConfigError("domain: dimension mismatch");
  const double n = z.norm();
  if (!(n > 0.0)) return -1.0;
  switch (kind_) {
  case Kind::tube:
  case Kind::fs_ball: {
    const double best = (centre_matrix_.adjoint() * z).cwiseAbs().maxCoeff() / n;
    return angular_clearance(radius_, std::acos(std::clamp(best, 0.0, 1.0)));
  }
  case Kind::hyperplane_complement:
    return std::abs(normal_.cwiseProduct(z).sum()) / (n * normal_.norm());
  case Kind::intersection: {
    double c = kInf;
    for (const auto& m : members_) c = std::min(c, m.unit_clearance(z));
    return c;
  }
  }
  return -1.0;
}

Eigen::VectorXd ConeDomain::unit_clearances(const CMat& z) const {
  if (z.rows() != dim_) throw ConfigError("domain: dimension mismatch");
  const Eigen::VectorXd norms = z.colwise().norm().transpose();
  Eigen::VectorXd c(z.cols());
  switch (kind_) {
  case Kind::tube:
  case Kind::fs_ball: {
    const Eigen::MatrixXd overlap = (centre_matrix_.adjoint() * z).cwiseAbs();
    const Eigen::VectorXd best = overlap.colwise().maxCoeff().transpose();
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      const double cs = norms(j) > 0.0 ? best(j) / norms(j) : 0.0;
      c(j) = norms(j) > 0.0 ? angular_clearance(radius_, std::acos(std::clamp(cs, 0.0, 1.0))) : -1.0;
    }
    return c;
  }
  case Kind::hyperplane_complement: {
    const Eigen::VectorXcd l = z.transpose() * normal_;
    const double a = normal_.norm();
    for (Eigen::Index j = 0; j < z.cols(); ++j) c(j) = norms(j) > 0.0 ? std::abs(l(j)) / (norms(j) * a) : -1.0;
    return c;
  }
  case Kind::intersection: {
    c.setConstant(kInf);
    for (const auto& m : members_) c = c.cwiseMin(m.unit_clearances(z));
    return c;
  }
  }
  return c;
}

bool ConeDomain::contains(const CVec& z) const { return unit_clearance(z) > 0.0; }

double ConeDomain::dist_lb(const CVec& z) const { return z.norm() * std::max(0.0, unit_clearance(z)); }

std::vector<CVec> ConeDomain::sample(int count, std::mt19937_64& rng) const {
  std::vector<CVec> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int max_attempts = 1000 * std::max(count, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    CVec z;
    switch (kind_) {
    case Kind::tube:
    case Kind::fs_ball: {
      const auto& k = centres_[static_cast<std::size_t>(unif(rng) * static_cast<double>(centres_.size())) % centres_.size()];
      CVec u = random_unit_vector(dim_, rng);
      u -= hdot(u, k) * k;
      if (u.norm() < 1e-8) continue;
      u.normalize();
      const double theta = std::min(radius_, kPi / 2) * 0.999 * std::sqrt(unif(rng));
      z = std::cos(theta) * k + std::sin(theta) * u;
      break;
    }
    case Kind::hyperplane_complement:
      z = random_unit_vector(dim_, rng);
      break;
    case Kind::intersection: {
      std::vector<CVec> s = members_.front().sample(1, rng);
      if (s.empty()) continue;
      z = s.front();
      break;
    }
    }
    if (unit_clearance(z) > 1e-9) out.push_back(z);
  }
  return out;
}

std::vector<CVec> ConeDomain::sample_closure(int count, std::mt19937_64& rng) const {
  std::vector<CVec> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int max_attempts = 1000 * std::max(count, 1);
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    CVec z;
    switch (kind_) {
    case Kind::tube:
    case Kind::fs_ball: {
      const auto& k = centres_[static_cast<std::size_t>(unif(rng) * static_cast<double>(centres_.size())) % centres_.size()];
      CVec u = random_unit_vector(dim_, rng);
      u -= hdot(u, k) * k;
      if (u.norm() < 1e-8) continue;
      u.normalize();
      const double r = std::min(radius_, kPi / 2);
      const double theta = attempt % 2 == 0 ? r : r * std::sqrt(unif(rng));
      z = std::cos(theta) * k + std::sin(theta) * u;
      break;
    }
    case Kind::hyperplane_complement:
      z = random_unit_vector(dim_, rng);
      break;
    case Kind::intersection: {
      const auto& mem = members_[static_cast<std::size_t>(attempt) % members_.size()];
      std::vector<CVec> s = mem.sample_closure(1, rng);
      if (s.empty()) continue;
      z = s.front();
      break;
    }
    }
    if (unit_clearance(z) >= -1e-14) out.push_back(z);
  }
  return out;
}

} // namespace discenv
