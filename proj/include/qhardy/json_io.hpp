#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhardy/factorization.hpp"
#include "qhardy/hardy.hpp"
#include "qhardy/quaternion.hpp"
#include "qhardy/series.hpp"
#include "qhardy/zeros.hpp"

namespace qhardy {

using json = nlohmann::json;

/// Throws std::invalid_argument naming `where` and the offending key when the
/// object holds a key outside `allowed`.
void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where);

/// Quaternions travel as [w, x, y, z].
json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j, const std::string& where);

/// Series travel as {"degree": N, "coeffs": [[w,x,y,z], ...]} with N+1 coeffs.
json to_json(const RegularSeries& f);
RegularSeries series_from_json(const json& j, const std::string& where);

/// [{"type":"isolated","point":[w,x,y,z],"mult":m},
///  {"type":"spherical","x":..,"y":..,"mult":2m}]; extra diagnostics carried
/// alongside the required fields.
json to_json(const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> zero_records_from_json(const json& j, const std::string& where);

json to_json(const HardyNormEstimate& est);
json to_json(const SliceNormResult& res);
json to_json(const BlaschkeFactorSpec& spec);
json to_json(const BlaschkeProduct& product);
json to_json(const FactorCertificates& cert);
json to_json(const ZeroExtraction& ze);
json to_json(const OuterInnerSplit& split);
json to_json(const OuterCertificateReport& rep);

}  // namespace qhardy
