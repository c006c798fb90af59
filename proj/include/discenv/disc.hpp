#pragma once

#include "discenv/common.hpp"

#include <random>
#include <vector>

namespace discenv {

inline constexpr double kDefaultDeltaMin = 1e-8;

/// Polynomial disc t -> sum_k c_k t^k in C^m \ {0}. Column k of the
/// coefficient matrix is c_k; column 0 is the centre.
class AnalyticDiscLift {
public:
  AnalyticDiscLift() = default;
  explicit AnalyticDiscLift(CMat coeffs, double delta_min = kDefaultDeltaMin);

  static AnalyticDiscLift constant(const CVec& centre);

  int dimension() const { return static_cast<int>(coeffs_.rows()); }
  int degree() const { return static_cast<int>(coeffs_.cols()) - 1; }
  const CMat& coeffs() const { return coeffs_; }
  CVec coeff(int k) const { return coeffs_.col(k); }
  CVec centre() const { return coeffs_.col(0); }
  double delta_min() const { return delta_min_; }

  /// Horner evaluation without the origin check.
  CVec value(Complex t) const;
  CVec derivative(Complex t) const;

  /// Checked evaluation; throws NumericalError on |t| > 1 + 1e-12 or when
  /// the value norm falls below delta_min / 2.
  CVec operator()(Complex t) const;

  /// Values at many parameters at once; column j is f(ts[j]).
  CMat values(const std::vector<Complex>& ts) const;

  /// Minimum of |f| over a polar validation grid of the closed disc
  /// (radial x angular, including the centre and the boundary circle).
  double min_norm_on_grid(int n_radial = 64, int n_angular = 64) const;
  bool avoids_origin(int n_radial = 64, int n_angular = 64) const;

  /// Coefficient-wise scaling by a complex scalar.
  AnalyticDiscLift scaled(Complex lambda) const;
  /// Precomposition with the rotation t -> e^{i theta} t.
  AnalyticDiscLift rotated(double theta) const;
  /// Precomposition with t -> r t.
  AnalyticDiscLift shrunk(double r) const;
  /// Zero-padded copy of higher degree.
  AnalyticDiscLift padded(int degree) const;
  /// Copy with the centre column replaced.
  AnalyticDiscLift recentred(const CVec& centre) const;
  /// The polynomial formed by one coordinate.
  std::vector<Complex> component(int i) const;

private:
  CMat coeffs_;
  double delta_min_ = kDefaultDeltaMin;
};

/// Disc of the form t -> base(t) / exp(g(t)) with g a finite power series.
class CompositeDisc {
public:
  CompositeDisc(AnalyticDiscLift base, std::vector<Complex> exponent);

  const AnalyticDiscLift& base() const { return base_; }
  const std::vector<Complex>& exponent() const { return exponent_; }
  int dimension() const { return base_.dimension(); }
  double delta_min() const { return base_.delta_min(); }

  Complex exponent_value(Complex t) const;
  Complex exponent_derivative(Complex t) const;

  CVec value(Complex t) const;
  CVec derivative(Complex t) const;
  CVec operator()(Complex t) const;
  CVec centre() const { return value(Complex{0.0, 0.0}); }

private:
  AnalyticDiscLift base_;
  std::vector<Complex> exponent_;
};

/// Random disc of degree 1..max_degree with every c_k uniform in the ball of
/// the given radius, redrawn until min |f| over the validation grid is at
/// least min_norm.
AnalyticDiscLift random_disc(int m, int max_degree, double radius, double min_norm, std::mt19937_64& rng);

/// Evaluates a polynomial with coefficients in increasing degree.
Complex horner(const std::vector<Complex>& p, Complex t);

} // namespace discenv
