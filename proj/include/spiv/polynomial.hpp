#pragma once

// Exact polynomial arithmetic over the rationals.
//
//  Poly      univariate polynomial in x
//  RatFunc   reduced quotient of two Polys with monic denominator
//  MvPoly    polynomial in the three indeterminates f1, f2, f3
//  MvRatFunc rational function in f1, f2, f3 kept as a constant times a
//            product of powers of primitive MvPoly factors

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spiv/core.hpp"

namespace spiv {

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT
  /// Coefficients from the constant term upwards.
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x();
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Poly derivative() const;
  Poly monic() const;
  Rational eval(const Rational& v) const;
  double eval(double v) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws PreconditionFailed for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd (zero when both are zero).
  static Poly gcd(Poly a, Poly b);

  /// Exact coefficients, e.g. `x^2 - 1/3`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly operator/(const Poly& a, const Poly& b);  // exact quotient (remainder dropped)
Poly operator%(const Poly& a, const Poly& b);

/// Square-free part of a nonzero polynomial (monic).
Poly square_free(const Poly& p);

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& num) : num_(num), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(int c) : num_(c), den_(1) {}              // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const;
  RatFunc inverse() const;
  Rational eval(const Rational& v) const;
  double eval(double v) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// `(num)/(den)` with integer-normalized polynomials, or `(num)` alone.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

// ---------------------------------------------------------------------------

class MvPoly {
 public:
  using Exponent = std::array<int, 3>;

  MvPoly() = default;
  MvPoly(const Rational& c);  // NOLINT
  MvPoly(int c) : MvPoly(Rational(c)) {}  // NOLINT
  /// The indeterminate f_{i+1}, i = 0..2.
  static MvPoly var(int i);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  /// Leading term in lexicographic order (f1 > f2 > f3).
  std::pair<Exponent, Rational> leading() const;

  MvPoly& operator+=(const MvPoly& o);
  MvPoly& operator-=(const MvPoly& o);
  MvPoly& operator*=(const MvPoly& o);
  friend MvPoly operator+(MvPoly a, const MvPoly& b) { return a += b; }
  friend MvPoly operator-(MvPoly a, const MvPoly& b) { return a -= b; }
  friend MvPoly operator*(MvPoly a, const MvPoly& b) { return a *= b; }
  MvPoly operator-() const;
  MvPoly pow(int n) const;
  friend bool operator==(const MvPoly& a, const MvPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MvPoly& a, const MvPoly& b) { return a.terms_ < b.terms_; }

  /// Exact quotient when b divides a (lexicographic division with zero
  /// remainder); nullopt otherwise.
  static std::optional<MvPoly> divide_exact(const MvPoly& a, const MvPoly& b);

  /// Splits into (c, q) with a == c q, q having integer coefficients of unit
  /// content and a positive leading coefficient.
  std::pair<Rational, MvPoly> primitive() const;

  /// Substitutes univariate rational functions for f1, f2, f3.
  RatFunc substitute(const std::array<RatFunc, 3>& f) const;
  double eval(const std::array<double, 3>& f) const;

  /// Terms in decreasing total degree, e.g. `9*f1^2*f2^2 - 9*f1^2*f2*f3 + 8`.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

class MvRatFunc {
 public:
  MvRatFunc() = default;
  MvRatFunc(const Rational& c) : coeff_(c) {}  // NOLINT
  MvRatFunc(int c) : coeff_(c) {}              // NOLINT
  explicit MvRatFunc(const MvPoly& p);
  static MvRatFunc var(int i) { return MvRatFunc(MvPoly::var(i)); }

  bool is_zero() const { return sgn(coeff_) == 0; }
  const Rational& coefficient() const { return coeff_; }
  /// Primitive factors with nonzero exponents (negative in the denominator).
  const std::map<MvPoly, int>& factors() const { return factors_; }

  MvRatFunc inverse() const;
  friend MvRatFunc operator*(const MvRatFunc& a, const MvRatFunc& b);
  friend MvRatFunc operator/(const MvRatFunc& a, const MvRatFunc& b) { return a * b.inverse(); }
  friend MvRatFunc operator+(const MvRatFunc& a, const MvRatFunc& b);
  friend MvRatFunc operator-(const MvRatFunc& a, const MvRatFunc& b) { return a + (-b); }
  MvRatFunc operator-() const;

  /// Product of the factors with positive exponent, times the coefficient.
  MvPoly numerator() const;
  RatFunc substitute(const std::array<RatFunc, 3>& f) const;

 private:
  void multiply_factor(const MvPoly& f, int e);
  Rational coeff_{0};
  std::map<MvPoly, int> factors_;
};

}  // namespace spiv
