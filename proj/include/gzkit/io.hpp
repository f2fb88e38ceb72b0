#pragma once

#include "gzkit/cover.hpp"
#include "gzkit/decomp.hpp"
#include "gzkit/gz.hpp"
#include "gzkit/hessenberg.hpp"
#include "gzkit/types.hpp"

#include <json.hpp>

#include <string>

namespace gzkit::io {

using nlohmann::json;

// Complex numbers are [re, im] pairs throughout the wire formats.
json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j);

json tuple_to_json(const CVector& v);
CVector tuple_from_json(const json& j);

/// {"dim": n, "entries": [[[re,im], ...], ...]} row-major.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {"n": n, "levels": [[[re,im], ...], ...]}.
json gzvalue_to_json(const GZValue& c);
GZValue gzvalue_from_json(const json& j);

/// {"n": n, "strata": [[parts...], ...]}.
json decomposition_to_json(const RegularDecompositionData& d);
RegularDecompositionData decomposition_from_json(const json& j);

/// {"x": matrix, "z": [[[re,im], ...], ...]}; membership is validated.
json cover_point_to_json(const CoverPoint& p);
CoverPoint cover_point_from_json(const json& j, double tol = kDefaultTol,
                                 double cluster_tol = kDefaultClusterTol);

/// {"levels": [{"s": [...], "t": [...]}, ...]}.
json zd_element_to_json(const ZDElement& k);
ZDElement zd_element_from_json(const json& j);

json certificate_to_json(const StrongRegularityCertificate& cert);
json generic_counts_to_json(const GenericCounts& g);
json atlas_to_json(int n, const std::vector<AtlasRow>& rows);

json load_json_file(const std::string& path);

}  // namespace gzkit::io
