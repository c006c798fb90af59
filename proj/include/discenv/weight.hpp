#pragma once

#include "discenv/common.hpp"
#include "discenv/domain.hpp"
#include "discenv/projective.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace discenv {

/// Homogeneous polynomial sum_i c_i z^{e_i} on C^m.
struct HomPoly {
  struct Term {
    Complex coeff;
    std::vector<int> exponents;
  };
  int dimension = 0;
  int degree = 0;
  std::vector<Term> terms;

  /// Validates dimensions and homogeneity; throws ConfigError.
  static HomPoly make(int dimension, std::vector<Term> terms);
  /// The coordinate function z_i.
  static HomPoly coordinate(int dimension, int i);

  Complex operator()(const CVec& z) const;
};

/// Weight phi on (an open subset of) P^n, evaluated through any nonzero
/// homogeneous representative.
class Weight {
public:
  enum class Kind { zero, constant, log_poly };

  static Weight zero();
  static Weight constant(double c);
  /// phi([z]) = (1/d) log|P(z)| - log|z| + shift.
  static Weight log_poly(HomPoly p, double shift = 0.0);

  Kind kind() const { return kind_; }
  double constant_value() const { return value_; }
  double shift() const { return value_; }
  const HomPoly& poly() const { return poly_; }

  /// phi([z]).
  double operator()(const CVec& z) const;
  /// Logarithmically homogeneous lift phi([z]) + log|z|.
  double lifted(const CVec& z) const;

private:
  Kind kind_ = Kind::zero;
  double value_ = 0.0;
  HomPoly poly_;
};

using ConeFunction = std::function<double(const CVec&)>;
using ProjFunction = std::function<double(const ProjPoint&)>;

/// Logarithmically homogeneous weight on a cone domain. Either built from a
/// Weight descriptor by lift_weight or wrapped around a user callable.
class LogHomWeight {
public:
  LogHomWeight(ConeFunction rule, std::optional<ConeDomain> domain = std::nullopt);

  /// Checked evaluation; throws InfeasibleError outside the domain.
  double operator()(const CVec& z) const;
  double unchecked(const CVec& z) const { return rule_(z); }

  const std::optional<ConeDomain>& domain() const { return domain_; }
  const std::optional<Weight>& descriptor() const { return descriptor_; }

private:
  friend LogHomWeight lift_weight(const Weight&, std::optional<ConeDomain>);
  ConeFunction rule_;
  std::optional<ConeDomain> domain_;
  std::optional<Weight> descriptor_;
};

/// phi~(z) = phi(pi(z)) + log|z|.
LogHomWeight lift_weight(const Weight& phi, std::optional<ConeDomain> domain = std::nullopt);

/// v on P^n  ->  u = v o pi + log|.| on C^{n+1} \ {0}.
ConeFunction to_log_homogeneous(ProjFunction v);
/// u logarithmically homogeneous  ->  v([z]) = u(z) - log|z|.
ProjFunction from_log_homogeneous(ConeFunction u);

/// u~(z) = u(z_{1..n} / z_0) + log|z_0| for a function u on C^n. Points with
/// z_0 = 0 evaluate to -inf and are reported through at_infinity().
class LelongLift {
public:
  explicit LelongLift(std::function<double(const CVec&)> u) : u_(std::move(u)) {}

  double operator()(const CVec& z) const;
  static bool at_infinity(const CVec& z) { return z(0) == Complex{0.0, 0.0}; }

private:
  std::function<double(const CVec&)> u_;
};

/// log^+ |w|.
double log_plus_norm(const CVec& w);

} // namespace discenv
