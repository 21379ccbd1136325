#include "spiv/rational.hpp"

#include <climits>
#include <cmath>
#include <set>

namespace spiv {

namespace {

Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

RationalTriple fundamental_first() {
  const RatFunc third = RatFunc(Poly::monomial(Rational(1, 3), 1));
  return {{third, third, third}, make_exact(Rational(1, 3), Rational(1, 3))};
}

RationalTriple fundamental_second() {
  return {{RatFunc::x(), RatFunc(0), RatFunc(0)}, make_exact(1, 0, 0)};
}

std::array<RatFunc, 3> spiv_residuals(const RationalTriple& r) {
  std::array<RatFunc, 3> out;
  for (int i = 0; i < 3; ++i) {
    const RatFunc& fi = r.f[i];
    out[i] = fi.derivative() - fi * (r.f[(i + 1) % 3] - r.f[(i + 2) % 3]) - RatFunc(r.params[i]);
  }
  return out;
}

ResidualReport verify_spiv(const RationalTriple& r) {
  const auto res = spiv_residuals(r);
  for (int i = 0; i < 3; ++i)
    if (!res[i].is_zero()) return {false, i + 1, res[i]};
  return {};
}

bool satisfies_constraint(const RationalTriple& r) {
  return r.f[0] + r.f[1] + r.f[2] == RatFunc::x() && r.params.sum() == 1;
}

RationalTriple act_on_rational(const GroupWord& w, const RationalTriple& r) {
  auto check = [](const RatFunc& f1) {
    if (f1.is_zero())
      throw Error(ErrorKind::IdenticallyZeroPivot, "tau applied where f1 is identically zero");
  };
  auto [f, p] = act_on_triple(w, r.f, r.params, check);
  return {f, p};
}

RationalTriple hermite_family(long alpha2) {
  RationalTriple r;
  r.params = make_exact(0, Rational(alpha2));
  r.f[0] = RatFunc(0);
  if (alpha2 >= 1) {
    // u'' + x u' + (1 - n) u = 0, u monic of degree n - 1.
    const long n = alpha2;
    std::vector<Rational> c(n, Rational(0));
    c[n - 1] = 1;
    for (long j = n - 3; j >= 0; --j)
      c[j] = -Rational((j + 2) * (j + 1)) * c[j + 2] / Rational(j + 1 - n);
    const Poly u(c);
    const RatFunc log_deriv(u.derivative(), u);
    r.f[1] = RatFunc::x() + log_deriv;
    r.f[2] = -log_deriv;
  } else {
    // v'' - x v' + m v = 0, v monic of degree m.
    const long m = -alpha2;
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = 1;
    for (long j = m - 2; j >= 0; --j)
      c[j] = Rational((j + 2) * (j + 1)) * c[j + 2] / Rational(j - m);
    const Poly v(c);
    r.f[1] = RatFunc(v.derivative(), v);
    r.f[2] = RatFunc::x() - r.f[1];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& v) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.eval(v));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p.coeff(i)) / lc;
    if (r > m) m = r;
  }
  return m + 1;
}

// Rational with the smallest denominator in [a, b], by continued fractions.
Rational simplest_between(const Rational& a, const Rational& b) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (a == Rational(fl)) return Rational(fl);
  if (Rational(fl + 1) <= b) return Rational(fl + 1);
  return Rational(fl) + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
}

class Isolator {
 public:
  Isolator(const Poly& q, const Rational& width) : q_(q), chain_(sturm_chain(q)), width_(width) {}

  void isolate(const Rational& a, const Rational& b, std::vector<RootInterval>& out) {
    const int n = variations(chain_, a) - variations(chain_, b);
    if (n == 0) return;
    if (n == 1) {
      out.push_back(refine(a, b));
      return;
    }
    Rational mid = (a + b) / 2;
    for (int k = 2; sgn(q_.eval(mid)) == 0; ++k) mid = a + (b - a) * Rational(k, 2 * k + 1);
    isolate(a, mid, out);
    isolate(mid, b, out);
  }

 private:
  RootInterval refine(Rational a, Rational b) const {
    if (sgn(q_.eval(b)) == 0) return {b, b, to_double(b)};
    const int sa = sgn(q_.eval(a));
    while (b - a > width_) {
      const Rational m = (a + b) / 2;
      const int sm = sgn(q_.eval(m));
      if (sm == 0) return {m, m, to_double(m)};
      if (sm == sa)
        a = m;
      else
        b = m;
    }
    // Catches rational roots such as 0 that bisection never hits exactly.
    const Rational s = simplest_between(a, b);
    if (sgn(q_.eval(s)) == 0) return {s, s, to_double(s)};
    return {a, b, to_double(Rational((a + b) / 2))};
  }

  Poly q_;
  std::vector<Poly> chain_;
  Rational width_;
};

}  // namespace

int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
  if (p.degree() <= 0) return 0;
  const auto chain = sturm_chain(square_free(p));
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> real_roots(const Poly& p, double width) {
  if (p.is_zero()) throw Error(ErrorKind::PreconditionFailed, "roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const Poly q = square_free(p);
  const Rational bound = cauchy_bound(q);
  Isolator(q, Rational(width)).isolate(-bound, bound, out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool vanishes_in(const Poly& p, const RootInterval& r) {
  if (p.degree() <= 0) return false;
  if (r.lo == r.hi) return sgn(p.eval(r.lo)) == 0;
  return sturm_count(p, r.lo, r.hi) > 0;
}

Symbol end_symbol(const RationalTriple& r) {
  std::array<int, 3> deg;
  std::array<Rational, 3> lead;
  for (int i = 0; i < 3; ++i) {
    const RatFunc& f = r.f[i];
    if (f.is_zero()) {
      deg[i] = INT_MIN;
      lead[i] = 0;
    } else {
      deg[i] = f.num().degree() - f.den().degree();
      lead[i] = f.num().leading() / f.den().leading();
    }
  }
  bool c = true;
  for (int i = 0; i < 3; ++i) c = c && deg[i] == 1 && lead[i] == Rational(1, 3);
  if (c) return Symbol::C;
  for (int k = 0; k < 3; ++k) {
    if (deg[k] == 1 && lead[k] == 1 && deg[(k + 1) % 3] < 0 && deg[(k + 2) % 3] < 0)
      return b_symbol(k + 1);
  }
  throw Error(ErrorKind::PreconditionFailed, "behaviour at infinity matches neither C nor B");
}

}  // namespace

SingularityProfile singularity_profile(const RationalTriple& r) {
  Poly d(1);
  for (const auto& f : r.f) d = d * f.den() / Poly::gcd(d, f.den());

  SingularityProfile out;
  for (const RootInterval& root : real_roots(d)) {
    PoleInfo info;
    info.x = root.value;
    info.residues = {0, 0, 0};
    std::vector<int> singular;
    for (int i = 0; i < 3; ++i) {
      const Poly& den = r.f[i].den();
      if (!vanishes_in(den, root)) continue;
      if (vanishes_in(Poly::gcd(den, den.derivative()), root))
        throw Error(ErrorKind::NonSimplePole,
                    "f" + std::to_string(i + 1) + " has a multiple pole near x = " +
                        format_double(root.value));
      singular.push_back(i);
      info.residues[i] = r.f[i].num().eval(root.value) / den.derivative().eval(root.value);
    }
    if (singular.size() != 2)
      throw Error(ErrorKind::PreconditionFailed,
                  "pole at x = " + format_double(root.value) + " is not of type A");
    const int j = 3 - singular[0] - singular[1];
    if (std::abs(info.residues[(j + 1) % 3] - 1.0) > 1e-6 ||
        std::abs(info.residues[(j + 2) % 3] + 1.0) > 1e-6)
      throw Error(ErrorKind::PreconditionFailed,
                  "residues at x = " + format_double(root.value) + " do not match type A" +
                      std::to_string(j + 1));
    info.type = j + 1;
    out.poles.push_back(info);
    out.sequence.interior.push_back(pole_symbol(j + 1));
  }
  const Symbol end = end_symbol(r);
  out.sequence.left = end;
  out.sequence.right = end;
  return out;
}

// ---------------------------------------------------------------------------
// Identities

bool same_up_to_scaling(const MvPoly& a, const MvPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.primitive().second == b.primitive().second;
}

std::vector<MvPoly> extract_identities(const GroupWord& w, const RationalTriple& r) {
  const GroupWord inv = inverse(w);
  std::array<MvRatFunc, 3> g{MvRatFunc::var(0), MvRatFunc::var(1), MvRatFunc::var(2)};
  ExactParams p = r.params;
  std::set<MvPoly> pivot_factors;

  for (auto it = inv.rbegin(); it != inv.rend(); ++it) {
    if (*it == Generator::Tau) {
      if (g[0].is_zero() || g[0].substitute(r.f).is_zero())
        throw Error(ErrorKind::InverseUndefined, "inverse word meets an identically zero f1");
      for (const auto& [f, e] : g[0].factors()) pivot_factors.insert(f);
    }
    auto [ng, np] = act_on_triple(*it, g, p, [](const MvRatFunc&) {});
    g = std::move(ng);
    p = std::move(np);
  }

  std::vector<MvRatFunc> relations;
  const Rational third(1, 3);
  if (p[0] == third && p[1] == third && p[2] == third) {
    relations = {g[0] - g[1], g[1] - g[2]};
  } else {
    int k = -1;
    for (int i = 0; i < 3; ++i)
      if (p[i] == 1 && p[(i + 1) % 3] == 0 && p[(i + 2) % 3] == 0) k = i;
    if (k < 0)
      throw Error(ErrorKind::PreconditionFailed,
                  "the inverse word does not lead to a fundamental parameter point");
    relations = {g[(k + 1) % 3], g[(k + 2) % 3]};
  }

  std::vector<MvPoly> out;
  for (const auto& rel : relations) {
    MvPoly poly(1);
    for (const auto& [f, e] : rel.factors())
      if (e > 0 && !pivot_factors.count(f)) poly *= f.pow(e);
    if (rel.is_zero()) poly = MvPoly();
    if (!poly.substitute(r.f).is_zero())
      throw Error(ErrorKind::PreconditionFailed,
                  "relation does not vanish on the triple; was it produced by this word?");
    out.push_back(poly.primitive().second);
  }
  return out;
}

MvPoly parse_mvpoly(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&] { throw Error(ErrorKind::ParseError, "cannot parse polynomial '" + text + "'"); };
  auto integer = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail();
    return mpz_class(text.substr(start, i - start));
  };
  auto factor = [&]() -> MvPoly {
    skip();
    if (i < text.size() && text[i] == 'f') {
      ++i;
      if (i >= text.size() || text[i] < '1' || text[i] > '3') fail();
      const int v = text[i++] - '1';
      skip();
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        e = static_cast<int>(integer().get_si());
      }
      return MvPoly::var(v).pow(e);
    }
    Rational c(integer());
    skip();
    if (i < text.size() && text[i] == '/') {
      ++i;
      skip();
      const mpz_class d = integer();
      if (d == 0) fail();
      c /= Rational(d);
    }
    return MvPoly(c);
  };
  auto term = [&]() -> MvPoly {
    MvPoly t = factor();
    skip();
    while (i < text.size() && text[i] == '*') {
      ++i;
      t *= factor();
      skip();
    }
    return t;
  };
  MvPoly acc;
  skip();
  int sign = 1;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? -1 : 1;
  acc += MvPoly(sign) * term();
  skip();
  while (i < text.size()) {
    if (text[i] != '+' && text[i] != '-') fail();
    sign = text[i++] == '-' ? -1 : 1;
    acc += MvPoly(sign) * term();
    skip();
  }
  return acc;
}

std::vector<MvPoly> reference_first_identities() {
  return {parse_mvpoly("9*f1^2*f2^2 - 9*f1^2*f2*f3 + 3*f1^2 - 18*f1*f2 + 6*f1*f3 + 8"),
          parse_mvpoly("-9*f1^3*f2 + 9*f1^2*f2*f3 + 6*f1*f2 - 6*f1*f3 - 4")};
}

std::vector<MvPoly> reference_second_identities() {
  return {parse_mvpoly("f1^2*f2*f3^2 + f1^2*f3 - 5*f1*f2*f3 - f1*f3^2 - 3*f1 + 6*f2 + 2*f3"),
          parse_mvpoly("f1*f2^2*f3^2 + 5*f1*f2*f3 - f2^2*f3 + f2*f3^2 + 6*f1 - 3*f2 + 2*f3")};
}

RationalTriple reference_first_solution() {
  RationalTriple r;
  r.params = make_exact(Rational(-2, 3), Rational(1, 3), Rational(4, 3));
  r.f[0] = RatFunc(poly({-3, 0, 1}), poly({0, 3}));
  r.f[1] = RatFunc(poly({0, 3, 0, 1}), poly({-9, 0, 3}));
  r.f[2] = RatFunc(poly({-9, 0, -6, 0, 1}), poly({0, -9, 0, 3}));
  return r;
}

RationalTriple reference_second_solution() {
  RationalTriple r;
  r.params = make_exact(2, 2, -3);
  const Poly x = Poly::x();
  const Poly xm3 = poly({-3, 0, 1}), xp1 = poly({1, 0, 1}), xm1 = poly({-1, 0, 1}),
             xp3 = poly({3, 0, 1}), x4p3 = poly({3, 0, 0, 0, 1});
  r.f[0] = RatFunc(Poly(2) * x * xm3 * xp1, xm1 * x4p3);
  r.f[1] = RatFunc(Poly(-2) * x * xm1 * xp3, xp1 * x4p3);
  r.f[2] = RatFunc(x * x4p3, xm1 * xp1);
  return r;
}

}  // namespace spiv
