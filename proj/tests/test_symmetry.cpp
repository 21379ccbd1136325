#include <doctest.h>

#include <random>

#include "spiv/integrator.hpp"
#include "spiv/rational.hpp"
#include "spiv/symmetry.hpp"

using namespace spiv;

namespace {

const GroupWord kSigma3 = parse_word("s s s");
const GroupWord kTau2 = parse_word("t t");
// (tau sigma tau sigma^2)^3
const GroupWord kBraid = parse_word("t s t s s t s t s s t s t s s");

ExactParams random_exact(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-40, 40), d(1, 17);
  return make_exact(Rational(n(rng), d(rng)), Rational(n(rng), d(rng)));
}

}  // namespace

TEST_CASE("word text forms") {
  CHECK(format_word(parse_word("t s s t")) == "t s s t");
  CHECK(parse_word("tsst") == parse_word("t s s t"));
  CHECK(parse_word("τσστ") == parse_word("t s s t"));
  CHECK(parse_word("id").empty());
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("t x"), Error);
  CHECK(format_word(inverse(parse_word("s t"))) == "t s s");
  CHECK(compose(parse_word("s"), parse_word("t")) == parse_word("s t"));
}

TEST_CASE("rightmost generator acts first") {
  // t s on (a1, a2, a3): sigma first gives (a2, a3, a1), then tau flips a2.
  const ExactParams p = make_exact(Rational(1, 5), Rational(3, 10));
  const ExactParams q = act_on_alpha(parse_word("t s"), p);
  CHECK(q[0] == -p[1]);
  CHECK(q[1] == p[2] + p[1]);
  CHECK(q[2] == p[0] + p[1]);
  // tau sigma^2 tau sends x/3 at 1/3 to the parameters (-2/3, 1/3, 4/3).
  const ExactParams r = act_on_alpha(parse_word("t s s t"), make_exact(Rational(1, 3), Rational(1, 3)));
  CHECK(r == make_exact(Rational(-2, 3), Rational(1, 3)));
}

TEST_CASE("group relations hold exactly on parameters") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 50; ++n) {
    const ExactParams p = random_exact(rng);
    CHECK(act_on_alpha(kSigma3, p) == p);
    CHECK(act_on_alpha(kTau2, p) == p);
    CHECK(act_on_alpha(kBraid, p) == p);
    for (int k = 1; k <= 3; ++k) {
      const ExactParams r = reflect(k, p);
      CHECK(act_on_alpha(reflection_word(k), p) == r);
      CHECK(r[k - 1] == -p[k - 1]);
      CHECK(r.sum() == 1);
    }
    const GroupWord w = parse_word("t s t s s t s");
    CHECK(act_on_alpha(compose(inverse(w), w), p) == p);
  }
}

TEST_CASE("group relations hold exactly on rational solutions") {
  const RationalTriple base = act_on_rational(parse_word("t s s t"), fundamental_first());
  for (const GroupWord& w : {kSigma3, kTau2, kBraid}) {
    const RationalTriple r = act_on_rational(w, base);
    for (int i = 0; i < 3; ++i) CHECK(r[i] == base[i]);
    CHECK(r.params == base.params);
  }
}

TEST_CASE("group relations hold on floating states") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 50; ++n) {
    const Params p = make_params(u(rng), u(rng));
    SystemState s;
    s.x = u(rng);
    s.f = Eigen::Vector3d(u(rng), u(rng), 0);
    s.f[2] = s.x - s.f[0] - s.f[1];
    for (const GroupWord& w : {kSigma3, kTau2, kBraid}) {
      const auto [t, q] = act_pointwise(w, s, p);
      CHECK((t.f - s.f).cwiseAbs().maxCoeff() <= 1e-12 * (1 + s.f.cwiseAbs().maxCoeff()));
      for (int i = 0; i < 3; ++i) CHECK(std::abs(q[i] - p[i]) <= 1e-12);
      CHECK(t.x == s.x);
    }
  }
}

TEST_CASE("pointwise tau refuses a vanishing pivot") {
  SystemState s;
  s.x = 1;
  s.f = Eigen::Vector3d(0, 0.5, 0.5);
  try {
    act_pointwise(parse_word("t"), s, make_params(0.2, 0.3));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleOfTransform);
  }
  CHECK_NOTHROW(act_pointwise(parse_word("s"), s, make_params(0.2, 0.3)));
}

TEST_CASE("alcove reduction") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int n = 0; n < 100; ++n) {
    const Params p = make_params(u(rng), u(rng));
    const auto r = reduce_to_positive(p);
    for (int i = 0; i < 3; ++i) CHECK(r.image[i] > 0);
    const Params q = act_on_alpha(r.word, p);
    for (int i = 0; i < 3; ++i) CHECK(q[i] == doctest::Approx(r.image[i]).epsilon(1e-9));
  }
  const auto e = reduce_to_positive(make_exact(Rational(-2, 3), Rational(1, 3)));
  CHECK(e.image == make_exact(Rational(1, 3), Rational(1, 3)));
  CHECK(act_on_alpha(e.word, make_exact(Rational(-2, 3), Rational(1, 3))) == e.image);
  try {
    reduce_to_positive(make_exact(Rational(1), Rational(1, 2)));
    FAIL("no error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NonGenericParameters);
  }
}

TEST_CASE("tau commutes with integration") {
  const Params p = make_params(0.2, 0.3, 0.5);
  const GroupWord t = parse_word("t");
  const Params q = act_on_alpha(t, p);
  SystemState s0;
  s0.f = Eigen::Vector3d(0.3, 0.1, -0.4);
  const SystemState s1 = act_pointwise(t, s0, p).first;

  IntegratorOptions o;
  o.record_steps = false;
  for (int i = 1; i <= 40; ++i) o.output_points.push_back(0.1 * i);
  const Trajectory a = integrate(s0, p, 4.0, o);
  const Trajectory b = integrate(s1, q, 4.0, o);
  REQUIRE(a.pole_count() == 0);

  // Images of zeros of f1 are poles of the transformed solution.
  std::vector<double> zeros;
  for (const Event& e : a.events)
    if (e.kind == EventKind::Zero && e.index == 1) zeros.push_back(e.x);
  CHECK(static_cast<int>(zeros.size()) == b.pole_count());

  double err = 0;
  int compared = 0;
  for (const Sample& sa : a.samples) {
    bool near = false;
    for (double z : zeros) near = near || std::abs(sa.x - z) < 0.1;
    if (near) continue;
    for (const Sample& sb : b.samples) {
      if (sb.x != sa.x || sb.x != o.output_points[static_cast<int>(std::lround(sb.x * 10)) - 1])
        continue;
      SystemState st;
      st.x = sa.x;
      st.f = sa.f;
      err = std::max(err, (act_pointwise(t, st, p).first.f - sb.f).cwiseAbs().maxCoeff());
      ++compared;
    }
  }
  CHECK(compared > 20);
  CHECK(err < 1e-6);
}
