#include <doctest.h>

#include <cmath>

#include "spiv/rational.hpp"

using namespace spiv;

namespace {

bool same_triple(const RationalTriple& a, const RationalTriple& b) {
  return a.params == b.params && a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

bool same_sets(std::vector<MvPoly> got, const std::vector<MvPoly>& want) {
  if (got.size() != want.size()) return false;
  for (const MvPoly& w : want) {
    bool hit = false;
    for (const MvPoly& g : got) hit = hit || same_up_to_scaling(g, w);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fundamental solutions") {
  for (const RationalTriple& r : {fundamental_first(), fundamental_second()}) {
    CHECK(verify_spiv(r).zero);
    CHECK(satisfies_constraint(r));
  }
  RationalTriple bad = fundamental_first();
  bad.f[1] = bad.f[1] + RatFunc(1);
  bad.f[2] = bad.f[2] - RatFunc(1);
  const ResidualReport rep = verify_spiv(bad);
  CHECK(!rep.zero);
  CHECK(rep.component >= 1);
}

TEST_CASE("tau sigma^2 tau on the first fundamental solution") {
  const RationalTriple r = act_on_rational(parse_word("t s s t"), fundamental_first());
  CHECK(same_triple(r, reference_first_solution()));
  CHECK(verify_spiv(r).zero);
  const auto ids = extract_identities(parse_word("t s s t"), r);
  CHECK(same_sets(ids, reference_first_identities()));
  for (const MvPoly& id : ids) CHECK(id.substitute(r.f).is_zero());
}

TEST_CASE("the second hierarchy") {
  const GroupWord w = parse_word("s t s s t s s t s t s t");
  const RationalTriple r = act_on_rational(w, fundamental_second());
  CHECK(r.params == make_exact(2, 2, -3));
  CHECK(same_triple(r, reference_second_solution()));
  CHECK(verify_spiv(r).zero);
  CHECK(same_sets(extract_identities(w, r), reference_second_identities()));
  for (const MvPoly& id : reference_second_identities()) CHECK(id.substitute(r.f).is_zero());
}

TEST_CASE("a vanishing pivot is reported") {
  // sigma moves the zero component of (x, 0, 0) into first place.
  try {
    act_on_rational(parse_word("t s"), fundamental_second());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdenticallyZeroPivot);
  }
}

TEST_CASE("real roots") {
  const Poly x = Poly::x();
  const Poly p = (x * x - Poly(3)) * x * (x - Poly(Rational(1, 2)));
  const auto roots = real_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0].value + std::sqrt(3.0)) <= 1e-12);
  CHECK(roots[1].lo == 0);
  CHECK(roots[1].hi == 0);
  CHECK(roots[2].lo == Rational(1, 2));
  CHECK(std::abs(roots[3].value - std::sqrt(3.0)) <= 1e-12);
  for (const auto& r : roots) CHECK(r.hi - r.lo <= Rational(1, 1000000000));
  CHECK(sturm_count(p, -10, 10) == 4);
  CHECK(sturm_count(p, 0, 1) == 1);  // (0, 1] excludes 0
  CHECK(real_roots(x * x + Poly(1)).empty());
  CHECK(real_roots((x - Poly(2)) * (x - Poly(2))).size() == 1);
}

TEST_CASE("singularity profile of the closed-form solution") {
  const SingularityProfile s = singularity_profile(reference_first_solution());
  CHECK(to_string(s.sequence) == "C A1 A2 A1 C");
  REQUIRE(s.poles.size() == 3);
  CHECK(s.poles[1].x == 0.0);
  CHECK(s.poles[1].type == 2);
  CHECK(s.poles[0].residues[1] == doctest::Approx(1));
  CHECK(s.poles[0].residues[2] == doctest::Approx(-1));
  CHECK(to_string(singularity_profile(fundamental_first()).sequence) == "C C");
}

TEST_CASE("a double pole is rejected") {
  RationalTriple r = fundamental_first();
  const RatFunc d = RatFunc(1) / (RatFunc::x() * RatFunc::x());
  r.f[1] = r.f[1] + d;
  r.f[2] = r.f[2] - d;
  try {
    singularity_profile(r);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSimplePole);
  }
}

TEST_CASE("f1 = 0 family at integer alpha2") {
  for (long n = 1; n <= 6; ++n) {
    const RationalTriple r = hermite_family(n);
    CHECK(verify_spiv(r).zero);
    CHECK(satisfies_constraint(r));
    // The polynomial behind f3 has only the real root 0, and only for even n.
    CHECK(to_string(singularity_profile(r).sequence) == (n % 2 ? "B2 B2" : "B2 A1 B2"));
  }
  for (long m = 0; m <= 5; ++m) {
    const RationalTriple r = hermite_family(-m);
    CHECK(verify_spiv(r).zero);
    std::string want = "B3";
    for (long i = 0; i < m; ++i) want += " A1";
    CHECK(to_string(singularity_profile(r).sequence) == want + " B3");
  }
}
