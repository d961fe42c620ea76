#include "wirtlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace wirtlab {

namespace {

double get_number(const Json& j, const std::string& field) {
    if (!j.is_number()) throw std::runtime_error("field '" + field + "': expected a number");
    return j.get<double>();
}

std::vector<double> get_number_array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw std::runtime_error("field '" + field + "': expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            throw std::runtime_error("field '" + field + "': expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

TrigSeries series_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("series: expected a JSON object");
    double mean = 0.0;
    std::vector<double> cos_coeffs, sin_coeffs;
    for (const auto& [key, value] : j.items()) {
        if (key == "mean")
            mean = get_number(value, key);
        else if (key == "cos")
            cos_coeffs = get_number_array(value, key);
        else if (key == "sin")
            sin_coeffs = get_number_array(value, key);
        else
            throw std::runtime_error("series: unknown field '" + key + "'");
    }
    return TrigSeries(mean, std::move(cos_coeffs), std::move(sin_coeffs));
}

Json series_to_json(const TrigSeries& f) {
    Json j;
    j["mean"] = f.mean();
    Json cos_arr = Json::array(), sin_arr = Json::array();
    for (int n = 1; n <= f.degree(); ++n) {
        cos_arr.push_back(f.cos_coeff(n));
        sin_arr.push_back(f.sin_coeff(n));
    }
    j["cos"] = std::move(cos_arr);
    j["sin"] = std::move(sin_arr);
    return j;
}

PlaneCurve curve_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("curve: expected a JSON object");
    if (!j.contains("x")) throw std::runtime_error("curve: missing field 'x'");
    if (!j.contains("y")) throw std::runtime_error("curve: missing field 'y'");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "x" && key != "y")
            throw std::runtime_error("curve: unknown field '" + key + "'");
    }
    return PlaneCurve::make(series_from_json(j.at("x")), series_from_json(j.at("y")));
}

Json curve_to_json(const PlaneCurve& c) {
    Json j;
    j["x"] = series_to_json(c.x());
    j["y"] = series_to_json(c.y());
    return j;
}

Json table_to_json(const CoefficientTable& t) {
    const auto to_strings = [](const std::vector<BigInt>& v) {
        Json arr = Json::array();
        for (const auto& x : v) arr.push_back(x.str());
        return arr;
    };
    Json j;
    j["m"] = t.m;
    j["c"] = to_strings(t.c);
    j["lambda"] = to_strings(t.lambda);
    j["S"] = to_strings(t.S);
    return j;
}

Json report_to_json(const InequalityReport& r) {
    Json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["verdict"] = to_string(r.verdict);
    j["rtol"] = r.rtol;
    j["atol"] = r.atol;
    j["provenance"] = r.provenance;
    return j;
}

Json wirtinger_audit_to_json(const WirtingerAudit& a) {
    Json j;
    j["m"] = a.m;
    j["form_a"] = a.form_a;
    j["form_b"] = a.form_b;
    j["form_c"] = a.form_c;
    j["certificate"] = a.certificate;
    const char* form_name = a.form == WirtingerForm::A ? "a"
                            : a.form == WirtingerForm::B ? "b"
                                                         : "c";
    j["sandwich"] = Json{{"form", form_name},
                         {"lower", a.sandwich.lower},
                         {"upper", a.sandwich.upper}};
    j["equality"] = a.equality;
    j["rtol"] = a.rtol;
    j["atol"] = a.atol;
    return j;
}

Json curve_audit_to_json(const CurveAudit& a) {
    Json j;
    j["L"] = a.L;
    j["A"] = a.A;
    j["deficit"] = a.deficit;
    j["centroid"] = Json::array({a.centroid.x, a.centroid.y});
    j["T1"] = a.T1;
    j["T2"] = a.T2;
    j["sachs_gap"] = a.sachs_gap;
    j["reverse_sachs_rhs"] = a.reverse_sachs_rhs;
    return j;
}

Json convex_audit_to_json(const ConvexAudit& a) {
    Json j;
    j["m"] = a.m;
    j["parity"] = a.odd ? "odd" : "even";
    j["L"] = a.L;
    j["A"] = a.A;
    j["deficit"] = a.deficit;
    j["inv_curv"] = a.inv_curv;
    j["deriv_terms"] = a.deriv_terms;
    j["bound"] = a.bound;
    j["slack"] = a.slack;
    j["atol"] = a.atol;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace wirtlab
