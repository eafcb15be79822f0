#include "qhardy/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qhardy {

namespace {

double number_at(const json& j, const std::string& where) {
    if (!j.is_number())
        throw std::invalid_argument(where + ": expected a number");
    return j.get<double>();
}

}  // namespace

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    if (!obj.is_object()) throw std::invalid_argument(where + ": expected an object");
    for (const auto& item : obj.items())
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw std::invalid_argument(where + ": unknown field \"" + item.key() + "\"");
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument(where + ": expected [w, x, y, z]");
    Quaternion q;
    q.w = number_at(j[0], where + "[0]");
    q.x = number_at(j[1], where + "[1]");
    q.y = number_at(j[2], where + "[2]");
    q.z = number_at(j[3], where + "[3]");
    return q;
}

json to_json(const RegularSeries& f) {
    json coeffs = json::array();
    for (const auto& a : f.coeffs()) coeffs.push_back(to_json(a));
    return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

RegularSeries series_from_json(const json& j, const std::string& where) {
    reject_unknown_keys(j, {"degree", "coeffs"}, where);
    if (!j.contains("degree") || !j.contains("coeffs"))
        throw std::invalid_argument(where + ": needs \"degree\" and \"coeffs\"");
    if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 0)
        throw std::invalid_argument(where + ".degree: expected a nonnegative integer");
    const auto degree = j["degree"].get<std::size_t>();
    const json& coeffs = j["coeffs"];
    if (!coeffs.is_array())
        throw std::invalid_argument(where + ".coeffs: expected an array");
    if (coeffs.size() != degree + 1)
        throw std::invalid_argument(where + ".coeffs: length must equal degree + 1");
    std::vector<Quaternion> a;
    a.reserve(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        a.push_back(quaternion_from_json(coeffs[n],
                                         where + ".coeffs[" + std::to_string(n) + "]"));
    return RegularSeries(std::move(a));
}

json to_json(const std::vector<ZeroRecord>& records) {
    json out = json::array();
    for (const auto& r : records) {
        json item;
        switch (r.kind) {
            case ZeroKind::Isolated:
                item["type"] = "isolated";
                item["point"] = to_json(r.point);
                break;
            case ZeroKind::Spherical:
                item["type"] = "spherical";
                break;
            case ZeroKind::Unclassified:
                item["type"] = "unclassified";
                item["point"] = to_json(r.point);
                break;
        }
        item["x"] = r.x;
        item["y"] = r.y;
        item["mult"] = r.multiplicity;
        item["residual"] = r.residual;
        item["inside_ball"] = r.inside_ball;
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<ZeroRecord> zero_records_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
    std::vector<ZeroRecord> out;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string at = where + "[" + std::to_string(n) + "]";
        const json& item = j[n];
        reject_unknown_keys(item, {"type", "point", "x", "y", "mult", "residual", "inside_ball"},
                            at);
        if (!item.contains("type") || !item["type"].is_string())
            throw std::invalid_argument(at + ": needs a string \"type\"");
        ZeroRecord r;
        const std::string type = item["type"].get<std::string>();
        if (type == "isolated")
            r.kind = ZeroKind::Isolated;
        else if (type == "spherical")
            r.kind = ZeroKind::Spherical;
        else if (type == "unclassified")
            r.kind = ZeroKind::Unclassified;
        else
            throw std::invalid_argument(at + ".type: unknown value \"" + type + "\"");
        if (!item.contains("mult"))
            throw std::invalid_argument(at + ": needs \"mult\"");
        r.multiplicity = item["mult"].get<int>();
        if (r.kind != ZeroKind::Spherical) {
            if (!item.contains("point"))
                throw std::invalid_argument(at + ": needs \"point\"");
            r.point = quaternion_from_json(item["point"], at + ".point");
            const SliceCoordinates sc = slice_decompose(r.point);
            r.x = sc.x;
            r.y = sc.y;
        }
        if (item.contains("x")) r.x = number_at(item["x"], at + ".x");
        if (item.contains("y")) r.y = number_at(item["y"], at + ".y");
        if (r.kind == ZeroKind::Spherical && (!item.contains("x") || !item.contains("y")))
            throw std::invalid_argument(at + ": spherical records need \"x\" and \"y\"");
        if (item.contains("residual")) r.residual = number_at(item["residual"], at + ".residual");
        if (item.contains("inside_ball") && item["inside_ball"].is_boolean())
            r.inside_ball = item["inside_ball"].get<bool>();
        else
            r.inside_ball = r.x * r.x + r.y * r.y < 1.0;
        out.push_back(r);
    }
    return out;
}

json to_json(const HardyNormEstimate& est) {
    return json{{"p", std::isinf(est.p) ? json("inf") : json(est.p)},
                {"value", est.value},
                {"achieved_unit", to_json(est.achieved_unit.q())},
                {"r_used", est.r_used},
                {"truncation_error_bound", est.truncation_error_bound},
                {"divergent", est.divergent}};
}

json to_json(const SliceNormResult& res) {
    return json{{"value", res.value},
                {"r_used", res.r_used},
                {"tail_bound", res.tail_bound},
                {"divergent", res.divergent},
                {"means", res.means}};
}

json to_json(const BlaschkeFactorSpec& spec) {
    return json{{"spherical", spec.spherical},
                {"center", to_json(spec.center)},
                {"power", spec.power}};
}

json to_json(const BlaschkeProduct& product) {
    json factors = json::array();
    for (const auto& f : product.factors) factors.push_back(to_json(f));
    return json{{"factors", std::move(factors)},
                {"series", to_json(product.series)},
                {"truncation", product.truncation}};
}

json to_json(const FactorCertificates& cert) {
    return json{{"inner_interior_max", cert.inner_interior_max},
                {"inner_boundary_dev", cert.inner_boundary_dev},
                {"outer_domination_min", cert.outer_domination_min},
                {"boundary_modulus_dev", cert.boundary_modulus_dev},
                {"norm_ratio_dev", cert.norm_ratio_dev},
                {"reconstruction_residual", cert.reconstruction_residual},
                {"inner_split_residual", cert.inner_split_residual},
                {"pass", cert.pass()}};
}

json to_json(const ZeroExtraction& ze) {
    return json{{"h", to_json(ze.h)},
                {"g", to_json(ze.g)},
                {"residual", ze.residual},
                {"division_residual", ze.division_residual}};
}

json to_json(const OuterInnerSplit& split) {
    return json{{"outer", to_json(split.E)},
                {"inner", to_json(split.Inner)},
                {"singular", to_json(split.S)},
                {"blaschke", to_json(split.B)},
                {"certificates", to_json(split.certificates)}};
}

json to_json(const OuterCertificateReport& rep) {
    return json{{"pass", rep.pass},
                {"nonvanishing", rep.nonvanishing},
                {"inverse_norm_finite", rep.inverse_norm_finite},
                {"interior_min_modulus", rep.interior_min_modulus},
                {"inverse_norm", rep.inverse_norm},
                {"conjugate_exponent",
                 std::isinf(rep.conjugate_exponent) ? json("inf") : json(rep.conjugate_exponent)},
                {"detail", rep.detail}};
}

}  // namespace qhardy
