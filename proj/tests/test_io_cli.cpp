#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "zonotile/cli.hpp"
#include "zonotile/error.hpp"
#include "zonotile/io.hpp"
#include "zonotile/tiling2d.hpp"
#include "zonotile/tiling3d.hpp"

using namespace zonotile;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvariantViolation;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("zonotile_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
  int code;
  nlohmann::json report;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(out.str());
  } catch (...) {
  }
  return {code, j};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse documents") {
  const auto z = parse_zonotope3(
      R"({"type":"zonotope3","endpoints":[["0","0","1/2"],["0","1/2","0"],["1/2","0","0"],["1/2","1/2","1/2"],["1/2","1","1/2"]]})");
  CHECK(z == example_9_1());
  const auto l = parse_lattice3(R"({"type":"lattice3","basis":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
  CHECK(l == Lattice3::integer());
  const auto p = parse_polygon2(R"({"type":"polygon2","vertices":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  CHECK(polygon_area(p) == 1);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_document("{not json"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_document(R"({"type":"lattice2","basis":[["1/0","0"],["0","1"]]})"); }) ==
        ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"type":"lattice2","basis":[[1,0],[0,1]]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"type":"lattice2","basis":[["1","0"],["0","1"]],"extra":1})"); }) ==
        ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"type":"sphere"})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"basis":[]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_document(R"({"type":"zonotope3","endpoints":[["1","0","0"],["2","0","0"]]})"); }) ==
        ErrorCode::InvariantViolation);
  CHECK(code_of([] { parse_document(R"({"type":"zonotope3","endpoints":[["0","0","0"]]})"); }) ==
        ErrorCode::InvariantViolation);
  CHECK(code_of([] {
          parse_document(R"({"type":"polygon2","vertices":[["0","0"],["4","0"],["1","1"],["0","4"]]})");
        }) == ErrorCode::InvariantViolation);
  CHECK(code_of([] { parse_document(R"({"type":"lattice2","basis":[["1","2"],["2","4"]]})"); }) ==
        ErrorCode::InvariantViolation);
  CHECK(code_of([] { parse_polygon2(R"({"type":"lattice2","basis":[["1","0"],["0","1"]]})"); }) ==
        ErrorCode::SchemaError);
}

TEST_CASE("serialization round trips exactly") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    auto z = oracle::random_zonotope(rng, 3 + t % 4);
    std::vector<Vec3> ends = z.endpoints();
    for (auto& v : ends) v = v * oracle::random_rational(rng, 1, 3, 7);
    const Zonotope3 zz = make_zonotope(ends, Vec3(oracle::random_rational(rng, -2, 2, 9), 0, Rational(1, 3)));
    CHECK(std::get<Zonotope3>(parse_document(serialize(zz))) == zz);

    std::vector<Vec2> g;
    for (int i = 0; i < 3; ++i) g.push_back(Vec2(oracle::random_rational(rng, -3, 3, 5), oracle::random_rational(rng, -3, 3, 5)));
    try {
      const Polygon2 p = zonogon_from_generators(g);
      CHECK(std::get<Polygon2>(parse_document(serialize(p))) == p);
    } catch (const Error&) {
    }

    const Vec2 b1(oracle::random_rational(rng, -3, 3, 4), oracle::random_rational(rng, -3, 3, 4));
    const Vec2 b2(oracle::random_rational(rng, -3, 3, 4), oracle::random_rational(rng, -3, 3, 4));
    if (!cross(b1, b2).is_zero()) {
      const Lattice2 l({b1, b2});
      CHECK(std::get<Lattice2>(parse_document(serialize(l))) == l);
    }
    const std::array<Vec3, 3> b3 = {ends[0] * Rational(2), Vec3(0, 1, 0) + ends[0], Vec3(Rational(1, 3), 0, 5)};
    if (!det3(b3[0], b3[1], b3[2]).is_zero()) {
      const Lattice3 l3(b3);
      CHECK(std::get<Lattice3>(parse_document(serialize(l3))) == l3);
    }
  }
}

TEST_CASE("rationals are written as strings") {
  const auto j = nlohmann::json::parse(serialize(example_9_1()));
  CHECK(j["type"] == "zonotope3");
  CHECK(j["endpoints"][0][2] == "1/2");
  CHECK(j["endpoints"][4][1] == "1");
}

TEST_CASE("OBJ export") {
  TempDir dir;
  const auto cube = fedorov(FedorovType::Parallelotope);
  export_obj(cube, dir / "cube.obj");
  const std::string text = slurp(dir / "cube.obj");
  auto count = [&](const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line))
      if (line.rfind(prefix, 0) == 0) ++n;
    return n;
  };
  CHECK(count("v ") == 8);
  CHECK(count("f ") == 12);
  CHECK(count("g ") == 6);

  export_obj(example_9_1(), dir / "e.obj");
  {
    std::istringstream in(slurp(dir / "e.obj"));
    std::string line;
    int groups = 0;
    while (std::getline(in, line))
      if (line.rfind("g ", 0) == 0) ++groups;
    CHECK(groups == 16);
  }

  const auto flat = intersect_translate(cube, Vec3(0, 0, 1));
  std::ostringstream out;
  write_obj(flat, out);
  const std::string ft = out.str();
  CHECK(std::count(ft.begin(), ft.end(), 'g') == 1);
  CHECK(ft.find("f 1 ") != std::string::npos);

  const auto slab = intersect_translate(cube, Vec3(0, 0, Rational(1, 2)));
  std::ostringstream out2;
  write_obj(slab, out2);
  const std::string st = out2.str();
  CHECK(std::count(st.begin(), st.end(), 'g') == 6);

  CHECK(code_of([&] { export_obj(cube, (dir.path / "missing" / "x.obj").string()); }) == ErrorCode::IoError);
}

TEST_CASE("command line") {
  TempDir dir;
  auto r = cli({"construct", "example9.1", "-o", dir / "e.json"});
  CHECK(r.code == 0);
  CHECK(std::get<Zonotope3>(read_document(dir / "e.json")) == example_9_1());

  std::ofstream(dir / "z3.json") << R"({"type":"lattice3","basis":[["1","0","0"],["0","1","0"],["0","0","1"]]})";
  r = cli({"verify-3d", dir / "e.json", dir / "z3.json", "--k", "10", "--samples", "1000", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "verified");
  CHECK(r.report["oracle"]["constant_multiplicity"] == 10);
  r = cli({"verify-3d", dir / "e.json", dir / "z3.json", "--k", "5", "--samples", "50", "--seed", "7"});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "refuted");

  CHECK(cli({"construct", "parallelotope", "-o", dir / "cube.json"}).code == 0);
  r = cli({"classify", dir / "cube.json"});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "parallelotope");
  r = cli({"classify", dir / "e.json"});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "not-fivefold");
  CHECK(r.report["violated"] == "8-belt present, no prism axis");

  r = cli({"belts", dir / "e.json"});
  CHECK(r.report["belt_sizes"] == nlohmann::json({8, 6, 8, 6, 6}));
  r = cli({"volume", dir / "e.json"});
  CHECK(r.report["volume"] == "10");

  CHECK(cli({"construct", "octagon-1", "--alpha", "1/2", "-o", dir / "o.json"}).code == 0);
  r = cli({"find-lattice", dir / "o.json", "--k", "5", "--max-den", "4", "-o", dir / "l.json"});
  CHECK(r.code == 0);
  CHECK(r.report["lattice"]["det"] == "2");
  r = cli({"verify-2d", dir / "o.json", dir / "l.json", "--k", "5", "--samples", "300", "--seed", "2"});
  CHECK(r.code == 0);
  CHECK(r.report["bolle"] == true);

  CHECK(cli({"construct", "cylinder", "--polygon", dir / "o.json", "--height", "3/2", "-o", dir / "c.json"}).code == 0);
  r = cli({"classify", dir / "c.json", "--search-bound", "4"});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "fivefold-octagonal-cylinder");
  r = cli({"project", dir / "c.json", "--axis", "4"});
  CHECK(r.code == 0);
  CHECK(r.report["area"] == "10");
  CHECK(r.report["family"] == "octagon-I");

  CHECK(cli({"export-obj", dir / "e.json", "-o", dir / "e.obj"}).report["facets"] == 16);
  CHECK(cli({"export-obj", dir / "e.json", "-o", dir / "i.obj", "--intersect", "0"}).code == 0);

  // usage and input errors
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"construct", "dodecagon", "-o", dir / "x.json"}).code == 2);
  CHECK(cli({"construct", "octagon-1", "--alpha", "2/3", "-o", dir / "x.json"}).code == 2);
  CHECK(cli({"volume", dir / "nope.json"}).code == 2);
  std::ofstream(dir / "bad.json") << R"({"type":"lattice2","basis":[["1/0","0"],["0","1"]]})";
  r = cli({"volume", dir / "bad.json"});
  CHECK(r.code == 2);
  CHECK(r.report["verdict"] == "error");
}

TEST_CASE("command line verdicts are deterministic") {
  TempDir dir;
  cli({"construct", "decagon", "-o", dir / "d.json"});
  std::ofstream(dir / "z2.json") << R"({"type":"lattice2","basis":[["1","0"],["0","1"]]})";
  const auto a = cli({"verify-2d", dir / "d.json", dir / "z2.json", "--k", "5", "--samples", "200", "--seed", "5"});
  const auto b = cli({"verify-2d", dir / "d.json", dir / "z2.json", "--k", "5", "--samples", "200", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.report == b.report);
}
