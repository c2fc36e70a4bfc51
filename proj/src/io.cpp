#include "latpoly/io.hpp"

#include <cmath>
#include <limits>

namespace latpoly {

namespace {

Int int_from_json(const Json& v, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
      throw ParseError(std::string(what) + ": integer out of signed 64-bit range");
    return v.get<Int>();
  }
  if (v.is_number_float() && v.get<double>() == std::floor(v.get<double>()))
    throw ParseError(std::string(what) + ": integer out of signed 64-bit range");
  throw ParseError(std::string(what) + ": expected an integer");
}

IntVector vector_from_json(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  IntVector out;
  for (const auto& x : v) out.push_back(int_from_json(x, what));
  return out;
}

IntMatrix matrix_from_json(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : v) rows.push_back(vector_from_json(r, what));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError(std::string(what) + ": rows of different lengths");
  return IntMatrix::from_rows(rows, cols);
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  if (!p.name().empty()) j["name"] = p.name();
  j["dim"] = p.dim();
  j["vertices"] = p.vertices();
  return j;
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polytope file: expected a JSON object");
  if (!j.contains("dim")) throw ParseError("polytope file: missing \"dim\"");
  if (!j.contains("vertices")) throw ParseError("polytope file: missing \"vertices\"");
  const Int dim = int_from_json(j["dim"], "dim");
  if (dim < 0) throw ParseError("dim must be non-negative");
  const Json& vs = j["vertices"];
  if (!vs.is_array() || vs.empty()) throw ParseError("vertices: expected a non-empty array");
  std::vector<IntVector> pts;
  for (const auto& v : vs) {
    IntVector p = vector_from_json(v, "vertex");
    if (p.size() != static_cast<std::size_t>(dim)) throw ParseError("vertex length differs from dim");
    pts.push_back(std::move(p));
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name: expected a string");
    name = j["name"].get<std::string>();
  }
  return LatticePolytope(static_cast<std::size_t>(dim), std::move(pts), std::move(name));
}

LatticePolytope parse_polytope(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

Json delta_to_json(const DeltaVector& d) { return {{"polynomial", d.polynomial()}, {"coefficients", d.entries}}; }

Json map_to_json(const UnimodularMap& m) {
  return {{"matrix", matrix_to_json(m.matrix.transposed())}, {"translation", m.translation}};
}

UnimodularMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw ParseError("map: expected {\"matrix\", \"translation\"}");
  IntMatrix m = matrix_from_json(j["matrix"], "matrix").transposed();
  IntVector t = j.contains("translation") ? vector_from_json(j["translation"], "translation") : IntVector(m.rows(), 0);
  if (m.rows() != m.cols()) throw ParseError("matrix must be square");
  try {
    return UnimodularMap::make(std::move(m), std::move(t));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("map: ") + e.what());
  }
}

Json witness_to_json(const std::vector<WitnessStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    if (s.kind == WitnessStep::Kind::Restrict) {
      out.push_back({{"kind", "restrict"}, {"origin", s.frame.origin}, {"basis", matrix_to_json(s.frame.basis)}});
    } else {
      Json m = map_to_json(s.map);
      m["kind"] = "map";
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<WitnessStep> witness_from_json(const Json& j) {
  if (j.is_object() && j.contains("witness")) return witness_from_json(j["witness"]);
  if (j.is_object()) return {{WitnessStep::Kind::Map, {}, map_from_json(j)}};
  if (!j.is_array()) throw ParseError("witness: expected an array of steps");
  std::vector<WitnessStep> out;
  for (const auto& s : j) {
    if (!s.is_object()) throw ParseError("witness step: expected an object");
    const std::string kind = s.value("kind", "map");
    if (kind == "restrict") {
      IntVector origin = vector_from_json(s.at("origin"), "origin");
      IntMatrix basis = s.at("basis").empty() ? IntMatrix(0, origin.size()) : matrix_from_json(s.at("basis"), "basis");
      if (basis.cols() != origin.size()) throw ParseError("restrict: basis and origin lengths differ");
      out.push_back({WitnessStep::Kind::Restrict, {std::move(origin), std::move(basis)}, {}});
    } else if (kind == "map") {
      out.push_back({WitnessStep::Kind::Map, {}, map_from_json(s)});
    } else {
      throw ParseError("witness step: unknown kind " + kind);
    }
  }
  return out;
}

Json entry_to_json(const CatalogEntry& e) {
  Json params = Json::object();
  const auto names = parameter_names(e.family);
  for (std::size_t i = 0; i < e.params.size() && i < names.size(); ++i) params[names[i]] = e.params[i];
  return {{"family", e.family}, {"params", params}, {"pyramids", e.pyramids}, {"label", e.to_string()}};
}

Json classification_to_json(const ClassificationResult& r) {
  Json j;
  j["volume"] = r.volume;
  j["in_scope"] = r.in_scope;
  if (!r.in_scope) {
    j["result"] = "volume exceeds 4";
    return j;
  }
  j["entry"] = entry_to_json(r.entry);
  j["witness"] = witness_to_json(r.witness);
  CatalogEntry bare = r.entry;
  bare.pyramids = 0;
  j["target"] = polytope_to_json(make_entry(bare));
  return j;
}

Json invariants_json(const LatticePolytope& p) {
  const Normalization norm = affine_lattice_normalize(p);
  const LatticePolytope& q = norm.polytope;
  const DeltaVector delta = delta_from_counts(q);
  Json j;
  j["ambient_dim"] = p.dim();
  j["dim"] = q.dim();
  j["num_vertices"] = q.num_vertices();
  j["simplex"] = is_simplex(q);
  j["delta"] = delta_to_json(delta);
  j["volume"] = delta.volume();
  j["spans"] = spans_lattice(q);
  j["pyramids"] = strip_pyramids(q).apexes;
  j["half_sum"] = half_sum_invariant(q);
  return j;
}

}  // namespace latpoly
