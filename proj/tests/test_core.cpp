#include <doctest.h>

#include <random>

#include "spiv/core.hpp"

using namespace spiv;

TEST_CASE("parameter triples respect the unit sum") {
  const Params p = make_params(0.2, 0.3);
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_NOTHROW(make_params(0.2, 0.3, 0.5));
  CHECK_THROWS_AS(make_params(0.2, 0.3, 0.6), Error);
  try {
    make_params(0.2, 0.3, 0.6);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolation);
    CHECK(std::string(e.name()) == "ConstraintViolation");
  }
  const ExactParams q = make_exact(Rational(-2, 3), Rational(1, 3));
  CHECK(q[2] == Rational(4, 3));
  CHECK(q.sum() == 1);
}

TEST_CASE("text forms round-trip") {
  const Params p = make_params(0.1, 0.7, 0.2);
  const Params q = parse_params(format_params(p));
  CHECK(q == p);
  // Decimals convert to the nearest double, like the C library does.
  CHECK(parse_params("0.2,0.3,0.5")[0] == 0.2);
  CHECK(parse_params("-2/3,1/3")[0] == -2.0 / 3.0);
  CHECK(parse_exact_params("0.2,0.3")[2] == Rational(1, 2));
  CHECK_THROWS_AS(parse_params("0.2"), Error);
  CHECK_THROWS_AS(parse_params("a,b"), Error);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("nearest-double conversion of rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const long n = num(rng), d = den(rng);
    CHECK(to_double(Rational(n, d)) == static_cast<double>(n) / static_cast<double>(d));
  }
}

TEST_CASE("sign cases and their rotation") {
  CHECK(sign_case(make_params(0.2, 0.3, 0.5)) == SignCase::PPP);
  CHECK(sign_case(make_params(0.5, 0.7, -0.2)) == SignCase::PPM);
  CHECK(sign_case(make_params(1.1, -0.03, -0.07)) == SignCase::PMM);
  CHECK_THROWS_AS(sign_case(make_params(0, 0.5, 0.5)), Error);
  for (SignCase c : kAllSignCases) {
    CHECK(parse_sign_case(to_string(c)) == c);
    CHECK(rotate(rotate(rotate(c))) == c);
    // Rotation is the sign pattern of (alpha2, alpha3, alpha1).
    for (int i = 0; i < 3; ++i) CHECK(case_sign(rotate(c), i) == case_sign(c, (i + 1) % 3));
  }
  CHECK(rotate(SignCase::PPM) == SignCase::PMP);
}

TEST_CASE("parameter-plane coordinates") {
  const Params p = make_params(0.2, 0.3, 0.5);
  const XiEta xe = xi_eta_from_alpha(p);
  const Params q = alpha_from_xi_eta(xe);
  for (int i = 0; i < 3; ++i) CHECK(q[i] == doctest::Approx(p[i]).epsilon(1e-14));
  const XiEta centre = xi_eta_from_alpha(make_params(1.0 / 3, 1.0 / 3));
  CHECK(centre.xi == doctest::Approx(0).scale(1));
  CHECK(centre.eta == doctest::Approx(0).scale(1));
}

TEST_CASE("P_IV correspondence") {
  const ExactParams p = make_exact(Rational(-2, 3), Rational(1, 3));
  const auto c1 = p4_parameters(p, 1);
  CHECK(c1.alpha == Rational(1));  // alpha3 - alpha2
  CHECK(c1.beta == Rational(-8, 9));
  const auto c2 = p4_parameters(p, 2);
  CHECK(c2.alpha == p[0] - p[2]);
  CHECK(c2.beta == -2 * p[1] * p[1]);
  CHECK_THROWS_AS(p4_parameters(p, 4), Error);

  SystemState s;
  s.x = 2;
  s.f = Eigen::Vector3d(0.5, 1.0, 0.5);
  const P4Point w = to_p4_point(s, to_double(p), 2);
  CHECK(w.z == doctest::Approx(std::sqrt(2.0)));
  CHECK(w.w == doctest::Approx(-std::sqrt(2.0)));
}
