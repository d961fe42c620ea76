#pragma once

#include "wirtlab/coefficients.hpp"
#include "wirtlab/convex.hpp"
#include "wirtlab/curve.hpp"
#include "wirtlab/report.hpp"
#include "wirtlab/trig.hpp"
#include "wirtlab/wirtinger.hpp"

#include <json.hpp>

#include <string>

namespace wirtlab {

using Json = nlohmann::ordered_json;

/// Series schema: {"mean": x, "cos": [a_1, ...], "sin": [b_1, ...]}. Missing
/// fields default to zero; wrong types and unknown fields raise
/// std::runtime_error naming the offending field.
TrigSeries series_from_json(const Json& j);
Json series_to_json(const TrigSeries& f);

/// Curve schema: {"x": <series>, "y": <series>}.
PlaneCurve curve_from_json(const Json& j);
Json curve_to_json(const PlaneCurve& c);

/// Integers serialized as decimal strings (they outgrow 64-bit around m = 8).
Json table_to_json(const CoefficientTable& t);

Json report_to_json(const InequalityReport& r);
Json wirtinger_audit_to_json(const WirtingerAudit& a);
Json curve_audit_to_json(const CurveAudit& a);
Json convex_audit_to_json(const ConvexAudit& a);

/// Parses a JSON document from a file, wrapping parse errors in
/// std::runtime_error with the path in the message.
Json load_json_file(const std::string& path);

} // namespace wirtlab
