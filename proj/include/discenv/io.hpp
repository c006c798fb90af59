#pragma once

#include "discenv/disc.hpp"
#include "discenv/disc_structure.hpp"
#include "discenv/domain.hpp"
#include "discenv/envelope.hpp"
#include "discenv/functionals.hpp"
#include "discenv/hull.hpp"
#include "discenv/projective.hpp"
#include "discenv/weight.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace discenv::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Parses JSON text; malformed input raises ConfigError naming line and column.
json parse_json(const std::string& text, const std::string& origin = "<input>");
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Extended reals: finite numbers as numbers, infinities as "+inf"/"-inf".
json real_to_json(double v);
double real_from_json(const json& j);

json complex_to_json(Complex c);
Complex complex_from_json(const json& j);
json vector_to_json(const CVec& v);
CVec vector_from_json(const json& j);

// Disc JSON: {"m": int, "degree": int, "coeffs": [[[re,im],...],...]}
json disc_to_json(const AnalyticDiscLift& d);
AnalyticDiscLift disc_from_json(const json& j);
json composite_to_json(const CompositeDisc& d);
CompositeDisc composite_from_json(const json& j);

// Point JSON: {"homogeneous": [...]} or {"affine": [...]}
json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j);
std::vector<ProjPoint> points_from_json(const json& j);

// Domain JSON: {"type": "tube"|"fs_ball"|"hyperplane_complement"|"intersection", ...}
json domain_to_json(const ConeDomain& d);
ConeDomain domain_from_json(const json& j);

// Weight JSON: {"type": "zero"|"constant"|"log_poly", ...}
json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json compact_set_to_json(const CompactSetSpec& k);
CompactSetSpec compact_set_from_json(const json& j);

json functional_to_json(const FunctionalValue& v);
json envelope_to_json(const EnvelopeEstimate& e);
json certificate_to_json(const HullCertificate& c);
json hull_result_to_json(const HullResult& r);
json schedule_to_json(const ScheduleResult& s);
json normalized_to_json(const NormalizedDisc& n);
json bprime_to_json(const BPrimeReport& r);
json feasibility_to_json(const FeasibilityReport& r);
json epsilon_witness_to_json(const EpsilonWitness& w);

} // namespace discenv::io
