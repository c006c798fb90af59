#include "discenv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace discenv::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return need(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

} // namespace

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw ConfigError("expected a real number");
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError("complex numbers are written as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

CVec vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("complex vectors are nonempty arrays of [re, im]");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json disc_to_json(const AnalyticDiscLift& d) {
  json coeffs = json::array();
  for (int k = 0; k <= d.degree(); ++k) coeffs.push_back(vector_to_json(d.coeff(k)));
  return {{"m", d.dimension()}, {"degree", d.degree()}, {"coeffs", coeffs}, {"delta_min", d.delta_min()}};
}

AnalyticDiscLift disc_from_json(const json& j) {
  const int m = get_as<int>(j, "m");
  const json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw ConfigError("disc coeffs must be a nonempty array");
  if (j.contains("degree") && get_as<int>(j, "degree") + 1 != static_cast<int>(coeffs.size()))
    throw ConfigError("disc degree does not match the number of coefficients");
  CMat c(m, static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const CVec v = vector_from_json(coeffs[k]);
    if (v.size() != m) throw ConfigError("disc coefficient " + std::to_string(k) + " has wrong length");
    c.col(static_cast<Eigen::Index>(k)) = v;
  }
  const double dmin = j.contains("delta_min") ? get_as<double>(j, "delta_min") : kDefaultDeltaMin;
  return AnalyticDiscLift(std::move(c), dmin);
}

json composite_to_json(const CompositeDisc& d) {
  json e = json::array();
  for (const auto& a : d.exponent()) e.push_back(complex_to_json(a));
  return {{"type", "composite"}, {"base", disc_to_json(d.base())}, {"exponent", e}};
}

CompositeDisc composite_from_json(const json& j) {
  std::vector<Complex> e;
  for (const auto& a : need(j, "exponent")) e.push_back(complex_from_json(a));
  return CompositeDisc(disc_from_json(need(j, "base")), std::move(e));
}

json point_to_json(const ProjPoint& p) { return {{"homogeneous", vector_to_json(p.rep())}}; }

ProjPoint point_from_json(const json& j) {
  if (j.is_object() && j.contains("homogeneous")) return project(vector_from_json(j.at("homogeneous")));
  if (j.is_object() && j.contains("affine")) return ProjPoint::from_affine(vector_from_json(j.at("affine")));
  if (j.is_array()) return project(vector_from_json(j));
  throw ConfigError("point must have 'homogeneous' or 'affine' coordinates");
}

std::vector<ProjPoint> points_from_json(const json& j) {
  const json& arr = (j.is_object() && j.contains("points")) ? j.at("points") : j;
  if (!arr.is_array()) throw ConfigError("expected an array of points");
  std::vector<ProjPoint> out;
  for (const auto& p : arr) out.push_back(point_from_json(p));
  return out;
}

json domain_to_json(const ConeDomain& d) {
  switch (d.kind()) {
  case ConeDomain::Kind::tube: {
    json s = json::array();
    for (const auto& c : d.centres()) s.push_back(vector_to_json(c));
    return {{"type", "tube"}, {"delta", d.radius()}, {"samples", s}};
  }
  case ConeDomain::Kind::fs_ball:
    return {{"type", "fs_ball"}, {"center", vector_to_json(d.centres().front())}, {"radius", d.radius()}};
  case ConeDomain::Kind::hyperplane_complement:
    return {{"type", "hyperplane_complement"}, {"normal", vector_to_json(d.normal())}};
  case ConeDomain::Kind::intersection: {
    json m = json::array();
    for (const auto& x : d.members()) m.push_back(domain_to_json(x));
    return {{"type", "intersection"}, {"members", m}};
  }
  }
  return {};
}

ConeDomain domain_from_json(const json& j) {
  const auto type = get_as<std::string>(j, "type");
  if (type == "tube") {
    std::vector<ProjPoint> s;
    for (const auto& p : need(j, "samples")) s.push_back(point_from_json(p));
    return ConeDomain::tube(std::move(s), get_as<double>(j, "delta"));
  }
  if (type == "fs_ball") {
    if (j.contains("affine_radius")) {
      const int n = j.contains("n") ? get_as<int>(j, "n") : 1;
      return ConeDomain::affine_ball(n, get_as<double>(j, "affine_radius"));
    }
    return ConeDomain::fs_ball(point_from_json(need(j, "center")), get_as<double>(j, "radius"));
  }
  if (type == "hyperplane_complement") return ConeDomain::hyperplane_complement(vector_from_json(need(j, "normal")));
  if (type == "intersection") {
    std::vector<ConeDomain> m;
    for (const auto& x : need(j, "members")) m.push_back(domain_from_json(x));
    return ConeDomain::intersection(std::move(m));
  }
  throw ConfigError("unknown domain type '" + type + "'");
}

json weight_to_json(const Weight& w) {
  switch (w.kind()) {
  case Weight::Kind::zero:
    return {{"type", "zero"}};
  case Weight::Kind::constant:
    return {{"type", "constant"}, {"value", w.constant_value()}};
  case Weight::Kind::log_poly: {
    json terms = json::array();
    for (const auto& t : w.poly().terms) terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"exponents", t.exponents}});
    return {{"type", "log_poly"}, {"dimension", w.poly().dimension}, {"terms", terms}, {"shift", w.shift()}};
  }
  }
  return {};
}

Weight weight_from_json(const json& j) {
  const auto type = get_as<std::string>(j, "type");
  if (type == "zero") return Weight::zero();
  if (type == "constant") return Weight::constant(get_as<double>(j, "value"));
  if (type == "log_poly") {
    std::vector<HomPoly::Term> terms;
    for (const auto& t : need(j, "terms"))
      terms.push_back({complex_from_json(need(t, "coeff")), get_as<std::vector<int>>(t, "exponents")});
    const double shift = j.contains("shift") ? get_as<double>(j, "shift") : 0.0;
    return Weight::log_poly(HomPoly::make(get_as<int>(j, "dimension"), std::move(terms)), shift);
  }
  throw ConfigError("unknown weight type '" + type + "'");
}

json compact_set_to_json(const CompactSetSpec& k) {
  json s = json::array();
  for (const auto& p : k.samples) s.push_back(vector_to_json(p.rep()));
  return {{"name", k.name}, {"connected", k.connected}, {"samples", s}};
}

CompactSetSpec compact_set_from_json(const json& j) {
  std::vector<ProjPoint> s;
  for (const auto& p : need(j, "samples")) s.push_back(point_from_json(p));
  const bool connected = j.contains("connected") ? get_as<bool>(j, "connected") : true;
  const std::string name = j.contains("name") ? get_as<std::string>(j, "name") : "K";
  return CompactSetSpec::make(std::move(s), connected, name);
}

namespace {

json quadrature_to_json(const QuadratureSettings& q) {
  return {{"nodes", q.nodes}, {"radial", q.radial}, {"angular", q.angular}};
}

} // namespace

json functional_to_json(const FunctionalValue& v) {
  json j = {{"total", real_to_json(v.total)},
            {"boundary_term", real_to_json(v.boundary_term)},
            {"interior_term", real_to_json(v.interior_term)},
            {"route", to_string(v.route)},
            {"quadrature", quadrature_to_json(v.quadrature)},
            {"centre_at_infinity", v.centre_at_infinity}};
  if (v.jensen_nodes > 0) j["jensen_nodes"] = v.jensen_nodes;
  if (v.interior_distinct) j["interior_term_distinct_zeros"] = real_to_json(*v.interior_distinct);
  return j;
}

json envelope_to_json(const EnvelopeEstimate& e) {
  json trace = json::array();
  for (double t : e.trace) trace.push_back(real_to_json(t));
  json best = json::array();
  for (double t : e.best_so_far) best.push_back(real_to_json(t));
  json j = {{"found", e.found},
            {"upper", real_to_json(e.upper)},
            {"witness", e.witness ? disc_to_json(*e.witness) : json(nullptr)},
            {"witness_source", e.witness_source},
            {"lower", e.lower ? real_to_json(*e.lower) : json(nullptr)},
            {"lower_candidate", e.lower_candidate},
            {"gap", e.gap ? real_to_json(*e.gap) : json(nullptr)},
            {"inconsistent", e.inconsistent},
            {"trace", trace},
            {"best_so_far", best},
            {"pool_best", real_to_json(e.pool_best)},
            {"evaluations", e.evaluations},
            {"message", e.message}};
  if (e.route_check) j["route_check"] = real_to_json(*e.route_check);
  return j;
}

json certificate_to_json(const HullCertificate& c) {
  return {{"x", point_to_json(c.x)},         {"lambda", c.lambda}, {"epsilon", c.epsilon},
          {"delta", c.delta},                {"witness", disc_to_json(c.witness)},
          {"value", real_to_json(c.value)},  {"quadrature", quadrature_to_json(c.quadrature)}};
}

json hull_result_to_json(const HullResult& r) {
  return {{"certified", r.certified},
          {"certificate", r.certificate ? certificate_to_json(*r.certificate) : json(nullptr)},
          {"best_value", real_to_json(r.best_value)},
          {"best_witness", r.best_witness ? disc_to_json(*r.best_witness) : json(nullptr)},
          {"warnings", r.warnings},
          {"message", r.message}};
}

json schedule_to_json(const ScheduleResult& s) {
  json est = json::array();
  for (double v : s.estimates) est.push_back(real_to_json(v));
  json wit = json::array();
  for (const auto& w : s.witnesses) wit.push_back(w ? disc_to_json(*w) : json(nullptr));
  return {{"deltas", s.deltas}, {"estimates", est}, {"witnesses", wit}, {"final_estimate", real_to_json(s.final_estimate)}};
}

json normalized_to_json(const NormalizedDisc& n) {
  return {{"disc", composite_to_json(n.disc)},
          {"centre", vector_to_json(n.centre)},
          {"centre_norm", n.centre_norm},
          {"neg_log_centre_norm", real_to_json(n.neg_log_centre_norm)},
          {"max_boundary_deviation", n.max_boundary_deviation}};
}

json bprime_to_json(const BPrimeReport& r) {
  return {{"normalized", normalized_to_json(r.normalized)},
          {"in_tube", r.in_tube},
          {"max_tube_distance", r.max_tube_distance},
          {"centre_bound_lhs", real_to_json(r.centre_bound_lhs)},
          {"centre_bound_rhs", real_to_json(r.centre_bound_rhs)},
          {"bound_holds", r.bound_holds},
          {"p_norm", r.p_norm},
          {"exp_neg_lambda", r.exp_neg_lambda},
          {"message", r.message}};
}

json feasibility_to_json(const FeasibilityReport& r) {
  return {{"feasible", r.feasible},
          {"boundary_inside", r.boundary_inside},
          {"avoids_origin", r.avoids_origin},
          {"min_boundary_clearance", r.min_boundary_clearance},
          {"min_norm", r.min_norm},
          {"worst_node", r.worst_node},
          {"message", r.message}};
}

json epsilon_witness_to_json(const EpsilonWitness& w) {
  return {{"success", w.success},
          {"w", w.w.size() > 0 ? vector_to_json(w.w) : json(nullptr)},
          {"distance", w.distance},
          {"disc", w.disc.coeffs().size() > 0 ? disc_to_json(w.disc) : json(nullptr)},
          {"value", real_to_json(w.value)},
          {"target", real_to_json(w.target)},
          {"radii_tried", w.radii_tried},
          {"evaluations", w.evaluations},
          {"message", w.message}};
}

} // namespace discenv::io
