#include "zonotile/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "zonotile/classify.hpp"
#include "zonotile/io.hpp"
#include "zonotile/tiling2d.hpp"
#include "zonotile/tiling3d.hpp"

namespace zonotile {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

VerifyOptions env_options() {
  VerifyOptions o;
  if (const char* t = std::getenv("THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(t, &end, 10);
    if (end != t && *end == '\0' && n > 0) o.threads = static_cast<std::size_t>(n);
  }
  return o;
}

template <std::size_t N>
json vec_json(const Vec<N>& v) {
  json a = json::array();
  for (std::size_t i = 0; i < N; ++i) a.push_back(v[i].to_string());
  return a;
}

template <std::size_t N>
json lattice_json(const Lattice<N>& l) {
  json b = json::array();
  for (const auto& v : l.basis()) b.push_back(vec_json(v));
  return {{"basis", b}, {"det", l.determinant().to_string()}};
}

json report_json(const MultiplicityReport& r) {
  json j = {{"samples", r.samples},
            {"expected_k", r.expected_k},
            {"volume_ratio", r.volume_ratio.to_string()},
            {"rejected", r.rejected},
            {"success", r.success}};
  j["constant_multiplicity"] = r.constant_value ? json(*r.constant_value) : json(nullptr);
  if (!r.constant_value && !r.multiplicities.empty()) {
    auto [lo, hi] = std::minmax_element(r.multiplicities.begin(), r.multiplicities.end());
    j["multiplicity_range"] = {*lo, *hi};
  }
  return j;
}

template <class T>
T load(const std::string& path) {
  Document d = read_document(path);
  if (!std::holds_alternative<T>(d))
    throw Error(ErrorCode::SchemaError, path + ": unexpected document type " + document_type(d));
  return std::get<T>(std::move(d));
}

Vec2 parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::SchemaError, "expected x,y but got '" + s + "'");
  return Vec2(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
}

struct Options {
  std::string name, file, file2, output, polygon;
  std::string alpha, beta, p1, height;
  long search_bound = 8;
  long max_den = 8;
  std::size_t axis = 0;
  std::size_t k = 1;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> intersect;
};

int construct(const Options& o, json& rep) {
  std::optional<Document> doc;
  const std::string& n = o.name;
  if (n == "example9.1") doc = example_9_1();
  else if (n == "parallelotope") doc = fedorov(FedorovType::Parallelotope);
  else if (n == "hex-prism") doc = fedorov(FedorovType::HexagonalPrism);
  else if (n == "rhombic-dodecahedron") doc = fedorov(FedorovType::RhombicDodecahedron);
  else if (n == "elongated-dodecahedron") doc = fedorov(FedorovType::ElongatedDodecahedron);
  else if (n == "truncated-octahedron") doc = fedorov(FedorovType::TruncatedOctahedron);
  else if (n == "octagon-1") doc = octagon_I(Rational::parse(o.alpha.empty() ? "1/2" : o.alpha));
  else if (n == "octagon-2") doc = octagon_II(Rational::parse(o.beta.empty() ? "1" : o.beta));
  else if (n == "decagon") doc = o.p1.empty() ? default_decagon() : decagon(parse_point(o.p1));
  else if (n == "cylinder") {
    if (o.polygon.empty()) throw Error(ErrorCode::SchemaError, "cylinder needs --polygon FILE");
    doc = cylinder(load<Polygon2>(o.polygon), Rational::parse(o.height.empty() ? "1" : o.height));
  } else {
    throw Error(ErrorCode::SchemaError, "unknown construct '" + n + "'");
  }
  write_document(*doc, o.output);
  rep = {{"verdict", "constructed"}, {"name", n}, {"type", document_type(*doc)}, {"output", o.output}};
  return kOk;
}

int classify_cmd(const Options& o, json& rep) {
  ClassifyOptions co;
  co.verify = env_options();
  const auto c = classify_fivefold(load<Zonotope3>(o.file), o.search_bound, co);
  const auto& e = c.evidence;
  rep = {{"verdict", to_string(c.tag)}, {"belt_sizes", e.belt_sizes}, {"inconclusive", e.inconclusive}};
  if (!e.violated.empty()) rep["violated"] = e.violated;
  if (e.prism_axis) rep["prism_axis"] = *e.prism_axis;
  if (e.family) {
    rep["cross_section_family"] = to_string(e.family->tag);
    if (!e.family->parameter.is_zero()) rep["family_parameter"] = e.family->parameter.to_string();
  }
  if (e.lattice2) rep["lattice2"] = lattice_json(*e.lattice2);
  if (e.oracle2) rep["oracle2"] = report_json(*e.oracle2);
  if (e.lattice3) rep["lattice3"] = lattice_json(*e.lattice3);
  if (e.oracle3) rep["oracle3"] = report_json(*e.oracle3);
  return c.tag == FivefoldClassTag::NotFivefold ? kFalse : kOk;
}

int belts_cmd(const Options& o, json& rep) {
  const auto p = load<Zonotope3>(o.file);
  p.require_full_dimensional();
  const auto counts = facet_edge_counts(p);
  json edges = json::array();
  for (const auto& [f, n] : counts.facets) edges.push_back(n);
  rep = {{"verdict", "ok"},
         {"belt_sizes", belt_sizes(p)},
         {"facets", counts.facets.size()},
         {"facet_edge_counts", edges},
         {"venkov_mcmullen", venkov_mcmullen_check(p)},
         {"prism_axes", prism_axes(p)}};
  return kOk;
}

int volume_cmd(const Options& o, json& rep) {
  const Document d = read_document(o.file);
  if (const auto* z = std::get_if<Zonotope3>(&d)) {
    rep = {{"verdict", "ok"}, {"volume", volume(*z).to_string()}};
  } else if (const auto* p = std::get_if<Polygon2>(&d)) {
    rep = {{"verdict", "ok"}, {"area", polygon_area(*p).to_string()}};
  } else {
    throw Error(ErrorCode::SchemaError, "volume needs a zonotope3 or polygon2 document");
  }
  return kOk;
}

int project_cmd(const Options& o, json& rep) {
  const auto p = load<Zonotope3>(o.file);
  const auto proj = project_along(p, o.axis);
  json verts = json::array();
  for (const auto& v : proj.polygon.vertices()) verts.push_back(vec_json(v));
  rep = {{"verdict", "ok"},
         {"axis", o.axis},
         {"dropped_coordinate", proj.map.dropped_axis},
         {"vertices", verts},
         {"area", polygon_area(proj.polygon).to_string()}};
  if (const auto fam = recognize_fivefold_2d(proj.polygon)) rep["family"] = to_string(fam->tag);
  if (!o.output.empty()) write_document(proj.polygon, o.output);
  return kOk;
}

int verify2d_cmd(const Options& o, json& rep) {
  const auto poly = load<Polygon2>(o.file);
  const auto lat = load<Lattice2>(o.file2);
  const auto r = verify_kfold(poly, lat, o.k, o.samples, o.seed, env_options());
  const auto b = bolle_check(poly, lat);
  rep = {{"verdict", r.success ? "verified" : "refuted"}, {"oracle", report_json(r)}, {"bolle", b.satisfied}};
  return r.success ? kOk : kFalse;
}

int verify3d_cmd(const Options& o, json& rep) {
  const auto p = load<Zonotope3>(o.file);
  const auto lat = load<Lattice3>(o.file2);
  const auto r = verify_kfold_3d(p, lat, o.k, o.samples, o.seed, env_options());
  rep = {{"verdict", r.success ? "verified" : "refuted"}, {"oracle", report_json(r)}};
  return r.success ? kOk : kFalse;
}

int find_lattice_cmd(const Options& o, json& rep) {
  const auto poly = load<Polygon2>(o.file);
  const auto l = find_lattice(poly, o.k, o.max_den);
  if (!l) {
    rep = {{"verdict", "not-found"}, {"k", o.k}, {"max_den", o.max_den}};
    return kFalse;
  }
  rep = {{"verdict", "found"}, {"k", o.k}, {"lattice", lattice_json(*l)}};
  if (!o.output.empty()) write_document(*l, o.output);
  return kOk;
}

int export_cmd(const Options& o, json& rep) {
  const auto p = load<Zonotope3>(o.file);
  p.require_full_dimensional();
  if (o.intersect) {
    if (*o.intersect >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
    const auto q = intersect_translate(p, p.edge_vector(*o.intersect));
    export_obj(q, o.output);
    rep = {{"verdict", "exported"}, {"output", o.output}, {"vertices", q.vertices.size()}, {"flat", q.flat()}};
  } else {
    export_obj(p, o.output);
    rep = {{"verdict", "exported"}, {"output", o.output}, {"facets", enumerate_facets(p).size()}};
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for multiple lattice tiles by zonotopes and zonogons", "zonotile"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "write a named object as a JSON document");
  construct_cmd->add_option("name", o.name, "example9.1, parallelotope, hex-prism, rhombic-dodecahedron, "
                                            "elongated-dodecahedron, truncated-octahedron, octagon-1, "
                                            "octagon-2, decagon, cylinder")
      ->required();
  construct_cmd->add_option("--alpha", o.alpha, "octagon-1 parameter in (0, 2/3)");
  construct_cmd->add_option("--beta", o.beta, "octagon-2 parameter in (0, 1]");
  construct_cmd->add_option("--p1", o.p1, "decagon base vertex x,y");
  construct_cmd->add_option("--height", o.height, "cylinder height");
  construct_cmd->add_option("--polygon", o.polygon, "cylinder base polygon document");
  construct_cmd->add_option("-o,--output", o.output)->required();

  auto* classify_sc = app.add_subcommand("classify", "fivefold classification of a zonotope");
  classify_sc->add_option("file", o.file)->required();
  classify_sc->add_option("--search-bound", o.search_bound, "largest lattice denominator tried")->check(CLI::PositiveNumber);

  auto* belts_sc = app.add_subcommand("belts", "belt sizes and facet edge counts");
  belts_sc->add_option("file", o.file)->required();

  auto* volume_sc = app.add_subcommand("volume", "exact volume (or area)");
  volume_sc->add_option("file", o.file)->required();

  auto* project_sc = app.add_subcommand("project", "project a zonotope along a generator");
  project_sc->add_option("file", o.file)->required();
  project_sc->add_option("--axis", o.axis, "generator index")->required();
  project_sc->add_option("-o,--output", o.output, "write the projected polygon document");

  auto* v2 = app.add_subcommand("verify-2d", "sampled multiplicity check of a polygon and lattice");
  auto* v3 = app.add_subcommand("verify-3d", "sampled multiplicity check of a zonotope and lattice");
  for (auto* sc : {v2, v3}) {
    sc->add_option("tile", o.file)->required();
    sc->add_option("lattice", o.file2)->required();
    sc->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    sc->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    sc->add_option("--seed", o.seed);
  }

  auto* fl = app.add_subcommand("find-lattice", "search for a k-fold tiling lattice of a polygon");
  fl->add_option("file", o.file)->required();
  fl->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  fl->add_option("--max-den", o.max_den)->check(CLI::PositiveNumber);
  fl->add_option("-o,--output", o.output, "write the lattice document");

  auto* ex = app.add_subcommand("export-obj", "write a zonotope as a Wavefront OBJ mesh");
  ex->add_option("file", o.file)->required();
  ex->add_option("-o,--output", o.output)->required();
  ex->add_option("--intersect", o.intersect, "export P cap (P + w_d) for generator d instead");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    out << json{{"verdict", "usage-error"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }

  json rep;
  int code = kOk;
  try {
    if (*construct_cmd) code = construct(o, rep);
    else if (*classify_sc) code = classify_cmd(o, rep);
    else if (*belts_sc) code = belts_cmd(o, rep);
    else if (*volume_sc) code = volume_cmd(o, rep);
    else if (*project_sc) code = project_cmd(o, rep);
    else if (*v2) code = verify2d_cmd(o, rep);
    else if (*v3) code = verify3d_cmd(o, rep);
    else if (*fl) code = find_lattice_cmd(o, rep);
    else if (*ex) code = export_cmd(o, rep);
  } catch (const Error& e) {
    rep = {{"verdict", "error"}, {"error", to_string(e.code())}, {"message", e.what()}};
    code = kUsage;
  }
  out << rep.dump(2) << "\n";
  return code;
}

}  // namespace zonotile
