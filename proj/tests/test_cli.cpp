#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sheaf1d/json_io.hpp"
#include "support.hpp"

using namespace testing_support;
using sheaf1d::json_io::Json;

namespace {

std::string data(const char* name) { return std::string(SHEAF1D_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sheaf1d::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes text to a fresh file in the temp directory and returns its path.
std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("sheaf1d_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("decompose prints the barcode of a zigzag rep") {
  auto r = run({"decompose", data("rep.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json()["schema_version"] == 1);
  CHECK(sheaf1d::json_io::barcode_from_json(r.json()) == barcode({{"[0,1]"}}));
}

TEST_CASE("energy of a single bar is its length") {
  auto r = run({"energy", data("bar03.json")});
  REQUIRE(r.code == 0);
  CHECK(r.json() == Json{{"energy", "3"}, {"schema_version", 1}});
  CHECK(run({"energy", data("open01.json")}).code == 2);
}

TEST_CASE("commands on barcodes") {
  auto ss = run({"ss", data("open01.json")});
  REQUIRE(ss.code == 0);
  CHECK(ss.json()["zero_section_support"] == Json{"[0,1]"});
  CHECK(ss.json()["rays"].size() == 2);
  CHECK(ss.json()["rays"][0]["kind"] == "simple");

  auto hom = run({"hom", data("bar03.json"), data("bar03.json")});
  CHECK(hom.json()["hom"] == Json::parse(R"j([{"degree": 0, "dim": 1}])j"));

  auto conv = run({"convolve", data("bar03.json"), "--kernel", "[0,1)"});
  CHECK(sheaf1d::json_io::barcode_from_json(conv.json()) == barcode({{"[0,1)"}, {"[3,4)", 1}}));
  // Unbounded below against an unbounded kernel: the pushforward is not proper.
  auto ray = temp_file("ray.json", R"j({"bars": [{"interval": "(-inf,0)"}]})j");
  CHECK(run({"convolve", ray, "--kernel", "[0,inf)"}).json()["error"]["kind"] == "not_proper");

  auto tau = run({"tau", data("bar03.json"), "--c", "3"});
  CHECK(tau.json()["nonzero"] == false);
  CHECK(run({"tau", data("bar03.json"), "--c", "5/2"}).json()["nonzero"] == true);

  CHECK(run({"orbit-hom", data("bar03.json"), data("bar03.json")}).json()["orbit_hom_dim"] == 1);
}

TEST_CASE("circle-decompose finds the monodromy of a local system") {
  auto r = run({"circle-decompose", data("cyclic.json")});
  REQUIRE(r.code == 0);
  auto cs = sheaf1d::json_io::circle_sheaf_from_json(r.json());
  CHECK(cs.bars().empty());
  CHECK(cs.local_part().at(0).rows() == 1);
  CHECK(run({"--circumference", "2", "circle-decompose", data("cyclic.json")}).code == 2);
}

TEST_CASE("germ-compose and square-kernel") {
  auto near = run({"germ-compose", data("ball1.json"), data("ball2.json"), "--x", "0", "--z", "2"});
  REQUIRE(near.code == 0);
  CHECK(near.json()["stalk"] == Json::parse(R"j([{"degree": 1, "dim": 1}])j"));
  CHECK(run({"germ-compose", data("ball1.json"), data("ball2.json"), "--x", "0", "--z", "4"}).json()["stalk"].empty());
  CHECK(run({"germ-compose", data("ball1.json"), data("ball2.json"), "--x", "0,0", "--z", "4"}).code == 2);

  auto stalk = run({"square-kernel", "--m", "2", "--point", "0,0,0,1"});
  CHECK(stalk.json()["stalk"] == stalk.json()["expected"]);
  auto boundary = run({"square-kernel", "--m", "2", "--point", "0,0,0,2"});
  CHECK(boundary.code == 2);
  CHECK(boundary.json()["error"]["kind"] == "boundary_point");
  auto line = run({"square-kernel", "--line", "0,0,0", "--window", "8"});
  CHECK(line.json()["barcode"]["bars"].size() == 4);
  CHECK(line.json()["energy"] == "2");
}

TEST_CASE("fourier-sato output reads back, and the antipodal transform inverts it up to shift") {
  auto once = run({"fourier-sato", data("conic.json")});
  REQUIRE(once.code == 0);
  std::string path = temp_file("fs.json", once.out);
  auto twice = run({"fourier-sato", path, "--antipodal"});
  REQUIRE(twice.code == 0);
  auto original = sheaf1d::json_io::conic_from_json(sheaf1d::json_io::read_file(data("conic.json")));
  auto back = sheaf1d::json_io::conic_from_json(twice.json());
  CHECK(back.barcode() == original.barcode().shifted(-1));
}

TEST_CASE("malformed input exits with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"energy", data("bad_version.json")},
           {"decompose", data("bad_rep.json")},
           {"energy", data("no_such_file.json")},
           {"energy", temp_file("not_json.json", "{bars: ")},
           {"--field", "3", "energy", data("bar03.json")},
           {"--field", "4", "energy", data("open01.json")},
           {"frobnicate"},
           {},
           {"verify", "--suite", "nope"},
           {"verify", "--suite", "hom", "--samples", "0"},
       }) {
    auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["message"].is_string());
    CHECK(!r.err.empty());
  }
  // A field given only on the command line applies to documents without one.
  CHECK(run({"--field", "3", "energy", data("open01.json")}).json()["error"]["kind"] == "precondition");
  CHECK(run({"--field", "3", "decompose", data("bad_rep.json")}).code == 2);
}

TEST_CASE("help exits with 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("germ-compose") != std::string::npos);
}

TEST_CASE("verify reports every check of the suite and is reproducible") {
  auto a = run({"verify", "--suite", "geodesic", "--samples", "10", "--seed", "7"});
  auto b = run({"verify", "--suite", "geodesic", "--samples", "10", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = a.json();
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "A5");
  CHECK(j["checks"][0]["anchor"] == "≃ k[−n] if ||x−z|| < t+s");
  CHECK(j["checks"][1]["id"] == "A6");
  CHECK(a.err.find("A5   PASS") != std::string::npos);
  for (const char* suite : {"gabriel", "hom", "energy", "projector", "circle", "orbit", "microsupport"}) {
    auto r = run({"verify", "--suite", suite, "--samples", "5"});
    CHECK_MESSAGE(r.code == 0, suite);
    CHECK(r.json()["checks"].size() == 1);
  }
}

TEST_CASE("output is byte-for-byte deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"ss", data("bar03.json")},
           {"hom", data("bar03.json"), data("open01.json")},
           {"circle-decompose", data("cyclic.json")},
       })
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("documents round trip through JSON") {
  namespace io = sheaf1d::json_io;
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    auto field = t % 3 == 0 ? FieldSpec::rationals() : FieldSpec::prime(t % 3 == 1 ? 2 : 5);
    auto b = random_barcode(rng, field, 4, -2, 2);
    CHECK(io::barcode_from_json(Json::parse(io::dump(io::document(io::to_json(b))))) == b);

    auto z = random_zigzag(rng, 3, 4, 10);
    auto zz = io::zigzag_from_json(io::to_json(z));
    CHECK(zz.points == z.points);
    CHECK(zz.dims == z.dims);
    CHECK(zz.left_maps == z.left_maps);
    CHECK(zz.right_maps == z.right_maps);

    auto c = random_mixed_cyclic(rng, t);
    auto cc = io::cyclic_from_json(io::to_json(c));
    CHECK(io::to_json(cc) == io::to_json(c));
    auto cs = decompose_circle(c);
    CHECK(io::circle_sheaf_from_json(io::to_json(cs)) == cs);

    auto s = ss(b);
    CHECK(io::microsupport_from_json(io::to_json(s)) == s);

    auto conic = ConicSheaf1D::from_barcode(GradedBarcode(FieldSpec::prime(2), {{Interval::from(0, coin(rng)), 0, 1}}));
    auto back = io::conic_from_json(io::to_json(conic));
    CHECK(back.parts == conic.parts);
  }
  auto cone = IndicatorComplex::indicator(geodesic_open_cone(), 2);
  CHECK(io::indicator_from_json(io::to_json(cone)) == cone);
}

TEST_CASE("readers name the offending path") {
  namespace io = sheaf1d::json_io;
  auto message = [](const char* text) {
    try {
      io::barcode_from_json(Json::parse(text));
    } catch (const MalformedInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"j({"bars": [{"interval": "[0,1)"}, {"interval": "[2,1)"}]})j").rfind("bars[1].interval", 0) == 0);
  CHECK(message(R"j({"bars": [{"interval": "[0,1)", "multiplicity": 0}]})j").rfind("bars[0].multiplicity", 0) == 0);
  CHECK(message(R"j({"field": 4, "bars": []})j").rfind("field", 0) == 0);
  CHECK(message(R"j({"bars": {}})j").rfind("bars", 0) == 0);
  CHECK(message(R"j([])j").rfind("document", 0) == 0);
  CHECK(message(R"j({"bars": []})j").empty());
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"j([["1", "2"]])j"), 1, 3, "m"), MalformedInput);
  CHECK_THROWS_AS(io::parse_point("1,x"), MalformedInput);
}
