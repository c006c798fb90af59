#include "discenv/weight.hpp"

#include <cmath>

namespace discenv {

HomPoly HomPoly::make(int dimension, std::vector<Term> terms) {
  if (dimension < 1) throw ConfigError("polynomial dimension must be positive");
  if (terms.empty()) throw ConfigError("polynomial needs at least one term");
  HomPoly p;
  p.dimension = dimension;
  p.degree = -1;
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != dimension) throw ConfigError("polynomial exponent length mismatch");
    int deg = 0;
    for (int e : t.exponents) {
      if (e < 0) throw ConfigError("polynomial exponents must be nonnegative");
      deg += e;
    }
    if (p.degree < 0) p.degree = deg;
    if (deg != p.degree) throw ConfigError("polynomial is not homogeneous");
  }
  if (p.degree < 1) throw ConfigError("homogeneous polynomial weight needs degree >= 1");
  p.terms = std::move(terms);
  return p;
}

HomPoly HomPoly::coordinate(int dimension, int i) {
  std::vector<int> e(static_cast<std::size_t>(dimension), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return make(dimension, {{Complex{1.0, 0.0}, e}});
}

Complex HomPoly::operator()(const CVec& z) const {
  if (z.size() != dimension) throw ConfigError("polynomial evaluated at wrong dimension");
  Complex acc{0.0, 0.0};
  for (const auto& t : terms) {
    Complex m = t.coeff;
    for (int i = 0; i < dimension; ++i)
      for (int e = 0; e < t.exponents[static_cast<std::size_t>(i)]; ++e) m *= z(i);
    acc += m;
  }
  return acc;
}

Weight Weight::zero() { return Weight{}; }

Weight Weight::constant(double c) {
  if (!std::isfinite(c)) throw ConfigError("constant weight must be finite");
  Weight w;
  w.kind_ = Kind::constant;
  w.value_ = c;
  return w;
}

Weight Weight::log_poly(HomPoly p, double shift) {
  if (!std::isfinite(shift)) throw ConfigError("weight shift must be finite");
  Weight w;
  w.kind_ = Kind::log_poly;
  w.value_ = shift;
  w.poly_ = std::move(p);
  return w;
}

double Weight::lifted(const CVec& z) const {
  switch (kind_) {
  case Kind::zero:
    return std::log(z.norm());
  case Kind::constant:
    return value_ + std::log(z.norm());
  case Kind::log_poly:
    return std::log(std::abs(poly_(z))) / poly_.degree + value_;
  }
  return 0.0;
}

double Weight::operator()(const CVec& z) const {
  switch (kind_) {
  case Kind::zero:
    return 0.0;
  case Kind::constant:
    return value_;
  case Kind::log_poly:
    return lifted(z) - std::log(z.norm());
  }
  return 0.0;
}

LogHomWeight::LogHomWeight(ConeFunction rule, std::optional<ConeDomain> domain)
    : rule_(std::move(rule)), domain_(std::move(domain)) {
  if (!rule_) throw ConfigError("weight rule must be callable");
}

double LogHomWeight::operator()(const CVec& z) const {
  if (domain_ && !domain_->contains(z)) throw InfeasibleError("weight evaluated outside its domain");
  return rule_(z);
}

LogHomWeight lift_weight(const Weight& phi, std::optional<ConeDomain> domain) {
  LogHomWeight w([phi](const CVec& z) { return phi.lifted(z); }, std::move(domain));
  w.descriptor_ = phi;
  return w;
}

ConeFunction to_log_homogeneous(ProjFunction v) {
  return [v = std::move(v)](const CVec& z) { return v(project(z)) + std::log(z.norm()); };
}

ProjFunction from_log_homogeneous(ConeFunction u) {
  return [u = std::move(u)](const ProjPoint& x) { return u(lift(x)) - std::log(lift(x).norm()); };
}

double LelongLift::operator()(const CVec& z) const {
  if (at_infinity(z)) return -kInf;
  const CVec w = z.tail(z.size() - 1) / z(0);
  return u_(w) + std::log(std::abs(z(0)));
}

double log_plus_norm(const CVec& w) { return std::max(0.0, std::log(w.norm())); }

} // namespace discenv
