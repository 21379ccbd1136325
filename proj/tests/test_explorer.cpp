#include <doctest.h>

#include <cmath>

#include "spiv/explorer.hpp"

using namespace spiv;

TEST_CASE("initial conditions on the constraint plane") {
  for (double anchor : {0.0, 1.0, -2.5}) {
    const Eigen::Vector3d f = initial_state(anchor, 0.4, -1.2);
    CHECK(f.sum() == doctest::Approx(anchor).epsilon(1e-15));
    CHECK(f[0] == 0.4);
    CHECK((f[1] - f[2]) / std::sqrt(3.0) == doctest::Approx(-1.2).epsilon(1e-14));
  }
}

TEST_CASE("grid points mirror exactly on symmetric windows") {
  for (int n : {2, 11, 201}) {
    CHECK(grid_point(-3, 3, n, 0) == -3);
    CHECK(grid_point(-3, 3, n, n - 1) == 3);
    for (int i = 0; i < n; ++i) CHECK(grid_point(-3, 3, n, i) == -grid_point(-3, 3, n, n - 1 - i));
  }
  CHECK(thread_count(3) == 3);
  CHECK(thread_count() >= 1);
}

TEST_CASE("a cell on the closed-form solution") {
  // tau sigma^2 tau applied to x/3 at x = 1: (-2/3, -2/3, 7/3).
  const Params p = make_params(-2.0 / 3, 1.0 / 3, 4.0 / 3);
  const ScanCell c = scan_point(p, 1.0, -2.0 / 3, -std::sqrt(3.0), 10, 10);
  CHECK(!c.failed);
  CHECK(c.n_minus == 2);  // at -sqrt(3) and 0
  CHECK(c.n_plus == 1);   // at sqrt(3)
  CHECK(c.left_class == AsymptoticClass::C);
  CHECK(c.right_class == AsymptoticClass::C);
  CHECK(to_string(c.sequence) == "C A1 A2 A1 C");
  CHECK(c.resolved());
}

TEST_CASE("small scan respects the mirror symmetry") {
  ScanOptions o;
  o.nu = o.nv = 9;
  o.window = {-2, 2, -2, 2};
  const ScanGrid g = scan_grid(make_params(0.2, 0.3, 0.5), o);
  REQUIRE(g.cells.size() == 81);
  int pole_free = 0;
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 9; ++i) {
      const ScanCell& a = g.at(i, j);
      const ScanCell& b = g.at(8 - i, 8 - j);
      CHECK(a.u == -b.u);
      CHECK(a.v == -b.v);
      CHECK(a.n_minus == b.n_plus);
      CHECK(a.left_class == b.right_class);
      pole_free += a.pole_free();
    }
  CHECK(g.at(4, 4).pole_free());
  CHECK(pole_free >= 1);
}

TEST_CASE("integrator failures stay inside their cell") {
  ScanOptions o;
  o.nu = o.nv = 3;
  o.integrator.max_steps = 3;
  const ScanGrid g = scan_grid(make_params(0.2, 0.3, 0.5), o);
  REQUIRE(g.cells.size() == 9);
  for (const ScanCell& c : g.cells) {
    CHECK(c.failed);
    CHECK(c.error == "StepFailure");
  }
}

TEST_CASE("polygons and brackets") {
  const std::vector<Eigen::Vector2d> sq{{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  CHECK(polygon_area(sq) == doctest::Approx(2));
  CHECK(polygon_area({sq.rbegin(), sq.rend()}) == doctest::Approx(2));
  Quadrilateral q;
  const Symbol outs[4][2] = {{Symbol::A1, Symbol::A2}, {Symbol::A1, Symbol::A3},
                             {Symbol::A2, Symbol::A2}, {Symbol::A2, Symbol::A3}};
  for (int i = 0; i < 4; ++i) q.corners[i] = {sq[i], {outs[i][0], outs[i][1]}};
  CHECK(q.is_bracketing());
  CHECK(q.perimeter() == doctest::Approx(6));
  CHECK(q.centroid().isApprox(Eigen::Vector2d(1, 0.5)));
  q.corners[3].outcome = q.corners[0].outcome;
  CHECK(!q.is_bracketing());
  CHECK(to_string(OutcomePair{Symbol::B2, Symbol::A1}) == "B2|A1");
}

TEST_CASE("B to B orbit in the positive alcove") {
  const Params p = make_params(0.2, 0.3, 0.5);
  const BtoBResult r =
      find_btob_pair(p, AsymptoticClass::B2, AsymptoticClass::B3, Window{}, 21);
  CHECK(r.check.left == AsymptoticClass::B2);
  CHECK(r.check.right == AsymptoticClass::B3);
  CHECK(r.check.poles == 0);
  CHECK(r.check.zero_counts == std::array<int, 3>{0, 0, 1});
  CHECK(r.perimeters.back() <= 1e-8);
  for (std::size_t i = 1; i < r.perimeters.size(); ++i)
    CHECK(r.perimeters[i] <= r.perimeters[i - 1] / 1.5);
  CHECK(r.uv[0] == doctest::Approx(0.245334).epsilon(1e-5));
  CHECK(r.uv[1] == doctest::Approx(-0.361115).epsilon(1e-5));
}

TEST_CASE("C to C region") {
  const CcRegion a = trace_cc_region(make_params(0.2, 0.3, 0.5));
  CHECK(a.boundary.size() == 64);
  CHECK(is_cc(make_params(0.2, 0.3, 0.5), 0, a.interior, 10));
  for (std::size_t i = 0; i < a.inside.size(); ++i) CHECK((a.inside[i] - a.outside[i]).norm() <= 1e-6);
  CHECK(a.area > 0.55);
  CHECK(a.area < 0.75);
  // Moving towards the edge of the alcove shrinks the region.
  const CcRegion b = trace_cc_region(make_params(0.1, 0.3, 0.6));
  CHECK(b.area < a.area);
  try {
    trace_cc_region(make_params(0.5, 0.7, -0.2));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoInteriorPoint);
  }
}

TEST_CASE("quartic relation for the alpha1 = 2 solutions") {
  const GroupWord w = parse_word("s s t s s t s t s s t s s t s");
  const QuarticReport r = quartic_residual_check(make_params(0, 0.4, 0.6), w, 0.5, 1.5);
  CHECK(r.transformed[0] == doctest::Approx(2));
  CHECK(r.p4_beta == doctest::Approx(-8));
  CHECK(r.p4_alpha == doctest::Approx(-1.8));
  CHECK(r.points >= 100);
  CHECK(r.spiv_residual < 1e-8);
  CHECK(r.quartic_residual < 1e-8);
  CHECK_THROWS_AS(quartic_residual_check(make_params(0, 0.4, 0.6), parse_word("s"), 0.5, 1.5),
                  Error);
  // The polynomial itself, at a point worked by hand: w = 1, w' = 0, z = 0,
  // alpha = 0 gives 1 + 16 - 256.
  CHECK(quartic_relation(1, 0, 0, 0) == doctest::Approx(-239));
}
