#include "discenv/disc.hpp"

#include <algorithm>
#include <cmath>

namespace discenv {

Complex horner(const std::vector<Complex>& p, Complex t) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

AnalyticDiscLift::AnalyticDiscLift(CMat coeffs, double delta_min)
    : coeffs_(std::move(coeffs)), delta_min_(delta_min) {
  if (coeffs_.rows() < 1 || coeffs_.cols() < 1)
    throw ConfigError("disc needs at least one coordinate and one coefficient");
  if (!(delta_min_ > 0.0)) throw ConfigError("disc delta_min must be positive");
  if (!coeffs_.allFinite()) throw ConfigError("disc coefficients must be finite");
}

AnalyticDiscLift AnalyticDiscLift::constant(const CVec& centre) {
  CMat c(centre.size(), 1);
  c.col(0) = centre;
  return AnalyticDiscLift(std::move(c));
}

CVec AnalyticDiscLift::value(Complex t) const {
  CVec acc = coeffs_.col(coeffs_.cols() - 1);
  for (Eigen::Index k = coeffs_.cols() - 2; k >= 0; --k) acc = acc * t + coeffs_.col(k);
  return acc;
}

CVec AnalyticDiscLift::derivative(Complex t) const {
  const Eigen::Index d = coeffs_.cols() - 1;
  CVec acc = CVec::Zero(coeffs_.rows());
  for (Eigen::Index k = d; k >= 1; --k) acc = acc * t + coeffs_.col(k) * static_cast<double>(k);
  return acc;
}

CVec AnalyticDiscLift::operator()(Complex t) const {
  if (std::abs(t) > 1.0 + 1e-12) throw NumericalError("disc evaluated outside the closed unit disc");
  CVec v = value(t);
  if (v.norm() < 0.5 * delta_min_) throw NumericalError("origin violation: disc value below delta_min/2");
  return v;
}

CMat AnalyticDiscLift::values(const std::vector<Complex>& ts) const {
  const Eigen::Index n = static_cast<Eigen::Index>(ts.size());
  const Eigen::Index ncoef = coeffs_.cols();
  CMat powers(ncoef, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex p{1.0, 0.0};
    for (Eigen::Index k = 0; k < ncoef; ++k) {
      powers(k, j) = p;
      p *= ts[static_cast<std::size_t>(j)];
    }
  }
  return coeffs_ * powers;
}

double AnalyticDiscLift::min_norm_on_grid(int n_radial, int n_angular) const {
  double best = value(Complex{0.0, 0.0}).norm();
  for (int i = 1; i <= n_radial; ++i) {
    const double rho = static_cast<double>(i) / n_radial;
    for (int j = 0; j < n_angular; ++j) {
      const double th = 2.0 * kPi * j / n_angular;
      best = std::min(best, value(std::polar(rho, th)).norm());
    }
  }
  return best;
}

bool AnalyticDiscLift::avoids_origin(int n_radial, int n_angular) const {
  return min_norm_on_grid(n_radial, n_angular) >= delta_min_;
}

AnalyticDiscLift AnalyticDiscLift::scaled(Complex lambda) const {
  return AnalyticDiscLift(coeffs_ * lambda, delta_min_);
}

AnalyticDiscLift AnalyticDiscLift::rotated(double theta) const {
  CMat c = coeffs_;
  for (Eigen::Index k = 0; k < c.cols(); ++k) c.col(k) *= std::polar(1.0, theta * static_cast<double>(k));
  return AnalyticDiscLift(std::move(c), delta_min_);
}

AnalyticDiscLift AnalyticDiscLift::shrunk(double r) const {
  CMat c = coeffs_;
  for (Eigen::Index k = 0; k < c.cols(); ++k) c.col(k) *= std::pow(r, static_cast<double>(k));
  return AnalyticDiscLift(std::move(c), delta_min_);
}

AnalyticDiscLift AnalyticDiscLift::padded(int degree) const {
  if (degree <= this->degree()) return *this;
  CMat c = CMat::Zero(coeffs_.rows(), degree + 1);
  c.leftCols(coeffs_.cols()) = coeffs_;
  return AnalyticDiscLift(std::move(c), delta_min_);
}

AnalyticDiscLift AnalyticDiscLift::recentred(const CVec& centre) const {
  if (centre.size() != coeffs_.rows()) throw ConfigError("recentre: dimension mismatch");
  CMat c = coeffs_;
  c.col(0) = centre;
  return AnalyticDiscLift(std::move(c), delta_min_);
}

std::vector<Complex> AnalyticDiscLift::component(int i) const {
  std::vector<Complex> p(static_cast<std::size_t>(coeffs_.cols()));
  for (Eigen::Index k = 0; k < coeffs_.cols(); ++k) p[static_cast<std::size_t>(k)] = coeffs_(i, k);
  return p;
}

CompositeDisc::CompositeDisc(AnalyticDiscLift base, std::vector<Complex> exponent)
    : base_(std::move(base)), exponent_(std::move(exponent)) {
  for (const auto& a : exponent_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ConfigError("composite disc exponent coefficients must be finite");
}

Complex CompositeDisc::exponent_value(Complex t) const { return horner(exponent_, t); }

Complex CompositeDisc::exponent_derivative(Complex t) const {
  Complex acc{0.0, 0.0};
  for (std::size_t k = exponent_.size(); k-- > 1;) acc = acc * t + exponent_[k] * static_cast<double>(k);
  return acc;
}

CVec CompositeDisc::value(Complex t) const { return base_.value(t) * std::exp(-exponent_value(t)); }

CVec CompositeDisc::derivative(Complex t) const {
  const Complex e = std::exp(-exponent_value(t));
  return (base_.derivative(t) - base_.value(t) * exponent_derivative(t)) * e;
}

CVec CompositeDisc::operator()(Complex t) const {
  if (std::abs(t) > 1.0 + 1e-12) throw NumericalError("disc evaluated outside the closed unit disc");
  CVec v = value(t);
  if (v.norm() < 0.5 * delta_min()) throw NumericalError("origin violation: disc value below delta_min/2");
  return v;
}

AnalyticDiscLift random_disc(int m, int max_degree, double radius, double min_norm, std::mt19937_64& rng) {
  if (m < 1 || max_degree < 0 || !(radius > 0.0)) throw ConfigError("random_disc: bad parameters");
  std::uniform_int_distribution<int> deg(std::min(1, max_degree), max_degree);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int d = deg(rng);
    CMat c(m, d + 1);
    for (int k = 0; k <= d; ++k) {
      CVec v(m);
      for (int i = 0; i < m; ++i) v(i) = Complex(gauss(rng), gauss(rng));
      const double r = radius * std::pow(unif(rng), 1.0 / (2.0 * m));
      c.col(k) = v * (r / v.norm());
    }
    AnalyticDiscLift disc(std::move(c));
    if (disc.min_norm_on_grid() >= min_norm) return disc;
  }
  throw NumericalError("random_disc: rejection sampling did not terminate");
}

} // namespace discenv
