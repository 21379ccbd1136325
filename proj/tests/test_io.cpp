#include <doctest.h>

#include <sstream>

#include "spiv/io.hpp"

using namespace spiv;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

ScanGrid tiny_grid() {
  ScanGrid g;
  g.nu = 3;
  g.nv = 2;
  g.cells.resize(6);
  for (int k = 0; k < 6; ++k) {
    g.cells[k].u = k % 3;
    g.cells[k].v = k / 3;
    g.cells[k].left_class = g.cells[k].right_class = AsymptoticClass::C;
    g.cells[k].sequence = parse_sequence("C C");
  }
  g.cells[5].failed = true;
  g.cells[5].error = "StepFailure";
  return g;
}

}  // namespace

TEST_CASE("trajectory CSV") {
  IntegratorOptions o;
  o.record_steps = false;
  o.output_points = {0.5, 1.0};
  const Trajectory t = integrate(Eigen::Vector3d(0.1, 0.2, -0.3), make_params(0.2, 0.3), 0, 1, o);
  std::ostringstream os;
  write_trajectory_csv(os, t);
  const auto l = lines(os.str());
  CHECK(l[0] == "x,f1,f2,f3,chart");
  CHECK(l.size() == t.samples.size() + 1);
  CHECK(l.back().substr(0, 2) == "1,");
  CHECK(l.back().substr(l.back().size() - 2) == ",F");
}

TEST_CASE("event JSON") {
  std::vector<Event> ev(2);
  ev[0].kind = EventKind::Pole;
  ev[0].index = 2;
  ev[0].x = -1.5;
  ev[0].direction = 1;
  ev[1].kind = EventKind::Zero;
  ev[1].index = 3;
  ev[1].x = 0.25;
  ev[1].direction = -1;
  const Json j = events_json(ev);
  CHECK(j.dump() ==
        R"([{"kind":"pole","type":"A2","x":-1.5,"direction":1},)"
        R"({"kind":"zero","component":3,"x":0.25,"direction":-1}])");
}

TEST_CASE("parameter JSON") {
  const Params p = make_params(0.1, 0.7, 0.2);
  CHECK(params_from_json(Json::parse(params_json(p).dump())) == p);
  try {
    params_from_json(Json{{"alpha1", 0.5}, {"alpha2", 0.5}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  try {
    params_from_json(Json{{"alpha1", 0.5}, {"alpha2", 0.5}, {"alpha3", 0.5}});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolation);
  }
}

TEST_CASE("scan CSV and raster") {
  const ScanGrid g = tiny_grid();
  std::ostringstream csv;
  write_scan_csv(csv, g);
  const auto l = lines(csv.str());
  REQUIRE(l.size() == 7);
  CHECK(l[0] == "u,v,n_minus,n_plus,left_class,right_class,sequence");
  CHECK(l[1] == "0,0,0,0,C,C,C C");
  CHECK(l[6] == "2,1,0,0,C,C,Failed:StepFailure");

  std::ostringstream ppm;
  write_scan_ppm(ppm, g);
  const std::string img = ppm.str();
  const std::string header = "P6\n3 2\n255\n";
  REQUIRE(img.size() == header.size() + 18);
  CHECK(img.substr(0, header.size()) == header);
  // v grows upwards: the failed cell (top row, right) is the third pixel.
  CHECK(img.substr(header.size() + 6, 3) == std::string(3, '\0'));
  CHECK(static_cast<unsigned char>(img[header.size()]) == 128);
  CHECK(static_cast<unsigned char>(img[header.size() + 1]) == 0);
}

TEST_CASE("raster palette") {
  ScanCell c;
  c.left_class = c.right_class = AsymptoticClass::C;
  CHECK(scan_color(c) == std::array<std::uint8_t, 3>{128, 0, 128});
  c.n_plus = 2;
  CHECK(scan_color(c)[0] == 0);
  c.left_capped = true;
  c.n_minus = 10;
  CHECK(scan_color(c) == std::array<std::uint8_t, 3>{40, 40, 255});
  c.right_capped = true;
  CHECK(scan_color(c) == std::array<std::uint8_t, 3>{255, 255, 255});
  ScanCell open;
  CHECK(scan_color(open) == std::array<std::uint8_t, 3>{128, 128, 128});
}

TEST_CASE("polyline and rational JSON") {
  std::ostringstream os;
  write_polyline_csv(os, {{0.5, -1}, {2, 3}});
  CHECK(os.str() == "u,v\n0.5,-1\n2,3\n");

  const RatFunc r(Poly::x() * Poly::x() - Poly(3), Poly::x() * Poly(3));
  const Json j = ratfunc_json(r);
  CHECK(j["num"] == Json::parse(R"(["-1","0","1/3"])"));
  CHECK(j["den"] == Json::parse(R"(["0","1"])"));
  const Json t = rational_triple_json(fundamental_second());
  CHECK(t["params"] == Json::parse(R"(["1","0","0"])"));
  CHECK(t["f"].size() == 3);
}
