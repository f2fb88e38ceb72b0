#include "gzkit/io.hpp"

#include <fstream>

namespace gzkit::io {

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw BadInput("expected a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json tuple_to_json(const CVector& v) {
  json out = json::array();
  for (int k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
  return out;
}

CVector tuple_from_json(const json& j) {
  if (!j.is_array()) throw BadInput("expected an array of complex values");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    v[static_cast<Eigen::Index>(k)] = complex_from_json(j[k]);
  return v;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw BadInput("matrix: expected {\"dim\", \"entries\"}");
  const int n = j["dim"].get<int>();
  if (n < 1) throw BadInput("matrix: dim must be >= 1");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw BadInput("matrix: entries must hold dim rows");
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!entries[static_cast<std::size_t>(r)].is_array() ||
        static_cast<int>(entries[static_cast<std::size_t>(r)].size()) != n)
      throw BadInput("matrix: row " + std::to_string(r) + " must hold dim entries");
    for (int c = 0; c < n; ++c)
      m(r, c) = complex_from_json(entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  if (!m.allFinite()) throw BadInput("matrix: entries must be finite");
  return m;
}

json gzvalue_to_json(const GZValue& c) {
  json levels = json::array();
  for (const CVector& lvl : c.levels) levels.push_back(tuple_to_json(lvl));
  return json{{"n", c.n()}, {"levels", std::move(levels)}};
}

GZValue gzvalue_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("levels"))
    throw BadInput("gz value: expected {\"n\", \"levels\"}");
  const int n = j["n"].get<int>();
  const json& levels = j["levels"];
  if (!levels.is_array() || static_cast<int>(levels.size()) != n)
    throw BadInput("gz value: levels must hold n arrays");
  GZValue c;
  for (int i = 1; i <= n; ++i) {
    CVector lvl = tuple_from_json(levels[static_cast<std::size_t>(i - 1)]);
    if (lvl.size() != i)
      throw BadInput("gz value: level " + std::to_string(i) + " must have " +
                     std::to_string(i) + " coefficients");
    c.levels.push_back(std::move(lvl));
  }
  return c;
}

json decomposition_to_json(const RegularDecompositionData& d) {
  json strata = json::array();
  for (const Partition& p : d.strata) strata.push_back(p.parts);
  return json{{"n", d.n}, {"strata", std::move(strata)}};
}

RegularDecompositionData decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("strata"))
    throw BadInput("decomposition data: expected {\"n\", \"strata\"}");
  const json& strata = j["strata"];
  if (!strata.is_array() || static_cast<int>(strata.size()) != j["n"].get<int>())
    throw BadInput("decomposition data: strata must hold n partitions");
  std::vector<Partition> parts;
  for (const json& p : strata) parts.push_back(make_partition(p.get<std::vector<int>>()));
  return make_decomposition_data(std::move(parts));
}

json cover_point_to_json(const CoverPoint& p) {
  json z = json::array();
  for (const CVector& zi : p.z) z.push_back(tuple_to_json(zi));
  return json{{"x", matrix_to_json(p.x)}, {"z", std::move(z)}};
}

CoverPoint cover_point_from_json(const json& j, double tol, double cluster_tol) {
  if (!j.is_object() || !j.contains("x") || !j.contains("z"))
    throw BadInput("cover point: expected {\"x\", \"z\"}");
  CMatrix x = matrix_from_json(j["x"]);
  const json& zj = j["z"];
  if (!zj.is_array()) throw BadInput("cover point: z must be an array of tuples");
  std::vector<CVector> z;
  for (const json& zi : zj) z.push_back(tuple_from_json(zi));
  return make_cover_point(std::move(x), std::move(z), tol, cluster_tol);
}

json zd_element_to_json(const ZDElement& k) {
  json levels = json::array();
  for (const ZdLevel& lvl : k.levels)
    levels.push_back(json{{"s", tuple_to_json(lvl.s)}, {"t", tuple_to_json(lvl.t)}});
  return json{{"levels", std::move(levels)}};
}

ZDElement zd_element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("levels"))
    throw BadInput("group element: expected {\"levels\"}");
  ZDElement k;
  for (const json& lvl : j["levels"]) {
    if (!lvl.is_object() || !lvl.contains("s") || !lvl.contains("t"))
      throw BadInput("group element: each level needs \"s\" and \"t\"");
    k.levels.push_back(ZdLevel{tuple_from_json(lvl["s"]), tuple_from_json(lvl["t"])});
  }
  return k;
}

json certificate_to_json(const StrongRegularityCertificate& cert) {
  return json{{"is_sreg", cert.is_sreg},
              {"per_level_regular", cert.per_level_regular},
              {"intersection_ranks", cert.intersection_ranks}};
}

json generic_counts_to_json(const GenericCounts& g) {
  return json{{"j", g.j}, {"orbit_count", g.orbit_count}, {"generic", g.generic}};
}

json atlas_to_json(int n, const std::vector<AtlasRow>& rows) {
  json out = json::array();
  for (const AtlasRow& row : rows) {
    out.push_back(json{{"stratum", decomposition_to_json(row.d)["strata"]},
                       {"dim_x", row.dim_x},
                       {"sigma_order", row.sigma},
                       {"dim_zd", row.zd.total},
                       {"dim_z", row.dim_z},
                       {"r", row.zd.r},
                       {"s", row.zd.s}});
  }
  return json{{"n", n}, {"strata", std::move(out)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadInput("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace gzkit::io
