#include "zonotile/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace zonotile {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

void allow_fields(const json& j, std::initializer_list<const char*> names) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(names.begin(), names.end(), [&](const char* n) { return it.key() == n; }))
      schema("unknown field '" + it.key() + "'");
  }
}

const json& require(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

Rational rational_of(const json& j) {
  if (!j.is_string()) schema("rationals must be JSON strings");
  return Rational::parse(j.get<std::string>());
}

template <std::size_t N>
Vec<N> vec_of(const json& j) {
  if (!j.is_array() || j.size() != N) schema("expected an array of " + std::to_string(N) + " rationals");
  Vec<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = rational_of(j[i]);
  return v;
}

template <std::size_t N>
std::vector<Vec<N>> vecs_of(const json& j) {
  if (!j.is_array()) schema("expected an array of points");
  std::vector<Vec<N>> out;
  for (const auto& e : j) out.push_back(vec_of<N>(e));
  return out;
}

template <std::size_t N>
json json_of(const Vec<N>& v) {
  json a = json::array();
  for (std::size_t i = 0; i < N; ++i) a.push_back(v[i].to_string());
  return a;
}

// Module invariants surface as InvariantViolation at parse time.
template <class F>
auto enforce(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError || e.code() == ErrorCode::InvariantViolation) throw;
    throw Error(ErrorCode::InvariantViolation, e.what());
  }
}

template <std::size_t N>
Lattice<N> lattice_of(const json& j) {
  allow_fields(j, {"type", "basis"});
  const auto rows = vecs_of<N>(require(j, "basis"));
  if (rows.size() != N) schema("basis must have " + std::to_string(N) + " vectors");
  std::array<Vec<N>, N> b;
  std::copy(rows.begin(), rows.end(), b.begin());
  return enforce([&] { return Lattice<N>(b); });
}

Document document_of(const json& j) {
  if (!j.is_object()) schema("document must be a JSON object");
  const json& type = require(j, "type");
  if (!type.is_string()) schema("'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "zonotope3") {
    allow_fields(j, {"type", "endpoints", "center"});
    const auto ends = vecs_of<3>(require(j, "endpoints"));
    Vec3 center;
    if (j.contains("center")) center = vec_of<3>(j["center"]);
    return enforce([&] { return Zonotope3(GeneratorSet::strict(ends), center); });
  }
  if (t == "polygon2") {
    allow_fields(j, {"type", "vertices"});
    const auto pts = vecs_of<2>(require(j, "vertices"));
    return enforce([&] {
      if (pts.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon needs at least three vertices");
      if (!is_strictly_convex_cycle(pts)) throw Error(ErrorCode::NotConvex, "vertices are not a strictly convex cycle");
      return Polygon2(pts);
    });
  }
  if (t == "lattice2") return lattice_of<2>(j);
  if (t == "lattice3") return lattice_of<3>(j);
  schema("unknown document type '" + t + "'");
}

json to_json(const Document& doc) {
  json j;
  j["type"] = document_type(doc);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Zonotope3>) {
          json e = json::array();
          for (const auto& v : x.endpoints()) e.push_back(json_of(v));
          j["endpoints"] = e;
          if (!x.center().is_zero()) j["center"] = json_of(x.center());
        } else if constexpr (std::is_same_v<T, Polygon2>) {
          json e = json::array();
          for (const auto& v : x.vertices()) e.push_back(json_of(v));
          j["vertices"] = e;
        } else {
          json e = json::array();
          for (const auto& v : x.basis()) e.push_back(json_of(v));
          j["basis"] = e;
        }
      },
      doc);
  return j;
}

template <class T>
T typed(const std::string& text, const char* name) {
  Document d = parse_document(text);
  if (!std::holds_alternative<T>(d)) schema(std::string("expected a ") + name + " document, got " + document_type(d));
  return std::get<T>(std::move(d));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
  return buf;
}

// Orders coplanar points counterclockwise as seen from the tip of normal.
std::vector<Vec3> planar_cycle(const std::vector<Vec3>& pts, const Vec3& normal) {
  std::size_t a = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (normal[i].abs() > normal[a].abs()) a = i;
  const std::size_t u = (a + 1) % 3, w = (a + 2) % 3;
  std::map<Vec2, Vec3> lift;
  std::vector<Vec2> flat;
  for (const auto& p : pts) {
    Vec2 q(p[u], p[w]);
    lift.emplace(q, p);
    flat.push_back(q);
  }
  const Polygon2 poly(flat);
  std::vector<Vec3> out;
  for (const auto& q : poly.vertices()) out.push_back(lift.at(q));
  if (normal[a].sign() < 0) std::reverse(out.begin(), out.end());
  return out;
}

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;  // vertex index cycles
};

std::size_t index_of(Mesh& m, std::map<Vec3, std::size_t>& ids, const Vec3& v) {
  auto [it, fresh] = ids.emplace(v, m.vertices.size());
  if (fresh) m.vertices.push_back(v);
  return it->second;
}

void emit(const Mesh& m, std::ostream& out, bool single_polygon) {
  for (const auto& v : m.vertices) out << "v " << decimal(v.x()) << ' ' << decimal(v.y()) << ' ' << decimal(v.z()) << '\n';
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& face = m.faces[f];
    out << "g facet_" << f << '\n';
    if (single_polygon) {
      out << 'f';
      for (auto i : face) out << ' ' << i + 1;
      out << '\n';
      continue;
    }
    for (std::size_t i = 1; i + 1 < face.size(); ++i)
      out << "f " << face[0] + 1 << ' ' << face[i] + 1 << ' ' << face[i + 1] + 1 << '\n';
  }
  if (!out) throw Error(ErrorCode::IoError, "failed writing OBJ output");
}

template <class P>
void export_to(const P& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  write_obj(p, out);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace

std::string document_type(const Document& doc) {
  static const char* names[] = {"zonotope3", "polygon2", "lattice2", "lattice3"};
  return names[doc.index()];
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  return document_of(j);
}

Document read_document(const std::string& path) { return parse_document(slurp(path)); }

Zonotope3 parse_zonotope3(const std::string& text) { return typed<Zonotope3>(text, "zonotope3"); }
Polygon2 parse_polygon2(const std::string& text) { return typed<Polygon2>(text, "polygon2"); }
Lattice2 parse_lattice2(const std::string& text) { return typed<Lattice2>(text, "lattice2"); }
Lattice3 parse_lattice3(const std::string& text) { return typed<Lattice3>(text, "lattice3"); }

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

void write_document(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << serialize(doc);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

void write_obj(const Zonotope3& p, std::ostream& out) {
  if (!p.is_full_dimensional()) throw Error(ErrorCode::IoError, "zonotope is not full-dimensional");
  Mesh m;
  std::map<Vec3, std::size_t> ids;
  for (const auto& f : enumerate_facets(p)) {
    std::vector<std::size_t> face;
    for (const auto& v : f.vertices) face.push_back(index_of(m, ids, v));
    m.faces.push_back(std::move(face));
  }
  emit(m, out, false);
}

void write_obj(const Polytope3& p, std::ostream& out) {
  Mesh m;
  std::map<Vec3, std::size_t> ids;
  if (p.flat()) {
    if (p.dimension < 2) throw Error(ErrorCode::IoError, "polytope has no two-dimensional face");
    const auto& v = p.vertices;
    Vec3 n;
    for (std::size_t i = 1; i < v.size() && n.is_zero(); ++i)
      for (std::size_t j = i + 1; j < v.size() && n.is_zero(); ++j) n = cross(v[i] - v[0], v[j] - v[0]);
    std::vector<std::size_t> face;
    for (const auto& x : planar_cycle(v, n)) face.push_back(index_of(m, ids, x));
    m.faces.push_back(std::move(face));
    emit(m, out, true);
    return;
  }
  for (const auto& h : p.halfspaces) {
    std::vector<Vec3> on;
    for (const auto& v : p.vertices)
      if (dot(h.normal, v) == h.offset) on.push_back(v);
    if (on.size() < 3 || affine_dimension(on) < 2) continue;
    std::vector<std::size_t> face;
    for (const auto& x : planar_cycle(on, h.normal)) face.push_back(index_of(m, ids, x));
    m.faces.push_back(std::move(face));
  }
  emit(m, out, false);
}

void export_obj(const Zonotope3& p, const std::string& path) { export_to(p, path); }
void export_obj(const Polytope3& p, const std::string& path) { export_to(p, path); }

}  // namespace zonotile
