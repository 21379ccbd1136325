#include "spiv/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace spiv {

namespace {

std::string coefficient_text(const Rational& c, bool first, bool has_monomial) {
  std::string out;
  Rational a = abs(c);
  if (first) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  if (!has_monomial || a != 1) {
    out += a.get_str();
    if (has_monomial) out += "*";
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  Poly out = *this;
  for (auto& c : out.c_) c /= lc;
  return out;
}

Rational Poly::eval(const Rational& v) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

double Poly::eval(double v) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + to_double(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::PreconditionFailed, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  std::vector<Rational> r = a.c_;
  const Rational lb = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational t = r[i + b.degree()] / lb;
    q[i] = t;
    if (sgn(t) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= t * b.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    out += coefficient_text(c_[i], first, i > 0);
    if (i > 0) out += var;
    if (i > 1) out += "^" + std::to_string(i);
    first = false;
  }
  return out;
}

Poly operator/(const Poly& a, const Poly& b) { return Poly::divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return Poly::divmod(a, b).second; }

Poly square_free(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::PreconditionFailed, "square-free part of zero");
  if (p.degree() == 0) return Poly(1);
  return (p / Poly::gcd(p, p.derivative())).monic();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::PreconditionFailed, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    num_ = num_ * Poly(1 / lc);
    den_ = den_.monic();
  }
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::PreconditionFailed, "inverse of the zero function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& v) const {
  const Rational d = den_.eval(v);
  if (sgn(d) == 0) throw Error(ErrorKind::PreconditionFailed, "evaluation at a pole");
  return num_.eval(v) / d;
}

double RatFunc::eval(double v) const { return num_.eval(v) / den_.eval(v); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string(const std::string& var) const {
  // Scale numerator and denominator by a common factor so that both have
  // integer coefficients with no common content.
  mpz_class l = 1, g = 0;
  for (const Poly* p : {&num_, &den_})
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> n, d;
  for (const auto& c : num_.coeffs()) n.push_back(c * l);
  for (const auto& c : den_.coeffs()) d.push_back(c * l);
  for (const auto* v : {&n, &d})
    for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (g != 0)
    for (auto* v : {&n, &d})
      for (auto& c : *v) c /= g;
  const Poly pn(n), pd(d);
  if (pd.degree() == 0 && pd.leading() == 1) return "(" + pn.to_string(var) + ")";
  return "(" + pn.to_string(var) + ")/(" + pd.to_string(var) + ")";
}

// ---------------------------------------------------------------------------
// MvPoly

MvPoly::MvPoly(const Rational& c) {
  if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
}

MvPoly MvPoly::var(int i) {
  MvPoly p;
  Exponent e{0, 0, 0};
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MvPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

int MvPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

std::pair<MvPoly::Exponent, Rational> MvPoly::leading() const {
  if (terms_.empty()) return {{0, 0, 0}, Rational(0)};
  return *terms_.rbegin();
}

void MvPoly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MvPoly& MvPoly::operator+=(const MvPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MvPoly& MvPoly::operator*=(const MvPoly& o) {
  MvPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  *this = std::move(r);
  return *this;
}

MvPoly MvPoly::operator-() const {
  MvPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MvPoly MvPoly::pow(int n) const {
  MvPoly r(1);
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

std::optional<MvPoly> MvPoly::divide_exact(const MvPoly& a, const MvPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::PreconditionFailed, "division by the zero polynomial");
  const auto [eb, cb] = b.leading();
  MvPoly r = a, q;
  while (!r.is_zero()) {
    const auto [er, cr] = r.leading();
    Exponent e;
    for (int i = 0; i < 3; ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) return std::nullopt;
    }
    MvPoly t;
    t.terms_[e] = cr / cb;
    q += t;
    r -= t * b;
  }
  return q;
}

std::pair<Rational, MvPoly> MvPoly::primitive() const {
  if (is_zero()) return {Rational(0), MvPoly()};
  mpz_class l = 1, g = 0;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : terms_) {
    const Rational s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Rational scale(l, g);  // multiply by this to reach the primitive form
  if (sgn(leading().second) < 0) scale = -scale;
  MvPoly q = *this;
  for (auto& [e, c] : q.terms_) c *= scale;
  return {1 / scale, q};
}

RatFunc MvPoly::substitute(const std::array<RatFunc, 3>& f) const {
  std::array<std::vector<RatFunc>, 3> powers;
  for (int i = 0; i < 3; ++i) powers[i].push_back(RatFunc(1));
  auto power = [&](int i, int n) -> const RatFunc& {
    while (static_cast<int>(powers[i].size()) <= n) powers[i].push_back(powers[i].back() * f[i]);
    return powers[i][n];
  };
  RatFunc acc;
  for (const auto& [e, c] : terms_)
    acc += RatFunc(c) * power(0, e[0]) * power(1, e[1]) * power(2, e[2]);
  return acc;
}

double MvPoly::eval(const std::array<double, 3>& f) const {
  double acc = 0;
  for (const auto& [e, c] : terms_)
    acc += to_double(c) * std::pow(f[0], e[0]) * std::pow(f[1], e[1]) * std::pow(f[2], e[2]);
  return acc;
}

std::string MvPoly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> t(terms_.begin(), terms_.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : t) {
    const bool mono = e != Exponent{0, 0, 0};
    out += coefficient_text(c, first, mono);
    std::string m;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!m.empty()) m += "*";
      m += "f" + std::to_string(i + 1);
      if (e[i] > 1) m += "^" + std::to_string(e[i]);
    }
    out += m;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// MvRatFunc

MvRatFunc::MvRatFunc(const MvPoly& p) {
  if (p.is_zero()) return;
  auto [c, q] = p.primitive();
  coeff_ = c;
  if (!q.is_constant()) factors_[q] = 1;
}

void MvRatFunc::multiply_factor(const MvPoly& f, int e) {
  if (e == 0) return;
  auto [it, inserted] = factors_.try_emplace(f, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  }
}

MvRatFunc MvRatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::PreconditionFailed, "inverse of zero");
  MvRatFunc r;
  r.coeff_ = 1 / coeff_;
  for (const auto& [f, e] : factors_) r.factors_[f] = -e;
  return r;
}

MvRatFunc MvRatFunc::operator-() const {
  MvRatFunc r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

MvRatFunc operator*(const MvRatFunc& a, const MvRatFunc& b) {
  if (a.is_zero() || b.is_zero()) return MvRatFunc();
  MvRatFunc r = a;
  r.coeff_ *= b.coeff_;
  for (const auto& [f, e] : b.factors_) r.multiply_factor(f, e);
  return r;
}

MvRatFunc operator+(const MvRatFunc& a, const MvRatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  // Pull out the common part g (largest denominator, shared numerator
  // factors); what is left of each operand is a polynomial.
  std::map<MvPoly, int> g;
  std::vector<MvPoly> pool;
  for (const auto& [f, e] : a.factors_) pool.push_back(f);
  for (const auto& [f, e] : b.factors_)
    if (!a.factors_.count(f)) pool.push_back(f);
  auto exponent = [](const MvRatFunc& r, const MvPoly& f) {
    auto it = r.factors_.find(f);
    return it == r.factors_.end() ? 0 : it->second;
  };
  auto remainder = [&](const MvRatFunc& r) {
    MvPoly p(r.coeff_);
    for (const auto& f : pool) {
      const int e = exponent(r, f) - g[f];
      if (e > 0) p *= f.pow(e);
    }
    return p;
  };
  for (const auto& f : pool) g[f] = std::min(exponent(a, f), exponent(b, f));
  const MvPoly sum = remainder(a) + remainder(b);
  if (sum.is_zero()) return MvRatFunc();

  MvRatFunc r;
  auto [c, q] = sum.primitive();
  r.coeff_ = c;
  for (const auto& [f, e] : g) r.multiply_factor(f, e);
  std::sort(pool.begin(), pool.end(), [](const MvPoly& x, const MvPoly& y) {
    return x.total_degree() < y.total_degree();
  });
  for (const auto& f : pool) {
    while (!q.is_constant() && q.total_degree() >= f.total_degree()) {
      auto quotient = MvPoly::divide_exact(q, f);
      if (!quotient) break;
      q = std::move(*quotient);
      r.multiply_factor(f, 1);
    }
  }
  if (!q.is_constant()) {
    r.multiply_factor(q, 1);
  } else {
    r.coeff_ *= q.leading().second;
  }
  return r;
}

MvPoly MvRatFunc::numerator() const {
  MvPoly p(coeff_);
  for (const auto& [f, e] : factors_)
    if (e > 0) p *= f.pow(e);
  return p;
}

RatFunc MvRatFunc::substitute(const std::array<RatFunc, 3>& f) const {
  RatFunc acc(coeff_);
  for (const auto& [p, e] : factors_) {
    const RatFunc v = p.substitute(f);
    for (int i = 0; i < std::abs(e); ++i) acc = e > 0 ? acc * v : acc / v;
  }
  return acc;
}

}  // namespace spiv
