#pragma once

// Shared domain types: parameter triples (exact or floating), states on the
// invariant plane f1 + f2 + f3 = x, parameter-plane coordinates and the map to
// the scalar fourth Painleve equation.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

#include "spiv/error.hpp"

namespace spiv {

using Rational = mpq_class;

template <class Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

inline constexpr double kSumTolerance = 1e-12;

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const Rational& v) { return sgn(v); }

inline bool is_integer_value(double v) {
  return std::abs(v - std::round(v)) <= kSumTolerance;
}
inline bool is_integer_value(const Rational& v) { return v.get_den() == 1; }

inline bool is_zero_value(double v) { return std::abs(v) <= kSumTolerance; }
inline bool is_zero_value(const Rational& v) { return sgn(v) == 0; }

inline double to_double(double v) { return v; }
/// Nearest double (GMP's own conversion truncates).
double to_double(const Rational& v);

/// The three parameters (alpha1, alpha2, alpha3) with alpha1 + alpha2 + alpha3 = 1.
/// Index 0 holds alpha1. Scalar is `double` for integration and `Rational` for
/// the exact symbolic paths; conversions between the two are explicit.
template <class Scalar>
struct ParameterTriple {
  std::array<Scalar, 3> a{};

  const Scalar& operator[](std::size_t i) const { return a[i]; }
  Scalar& operator[](std::size_t i) { return a[i]; }
  Scalar sum() const { return a[0] + a[1] + a[2]; }

  friend bool operator==(const ParameterTriple& l, const ParameterTriple& r) {
    return l.a[0] == r.a[0] && l.a[1] == r.a[1] && l.a[2] == r.a[2];
  }
};

using Params = ParameterTriple<double>;
using ExactParams = ParameterTriple<Rational>;

/// alpha3 is derived as 1 - alpha1 - alpha2.
Params make_params(double a1, double a2);
/// Rejects triples with |sum - 1| > 1e-12 (ConstraintViolation).
Params make_params(double a1, double a2, double a3);
ExactParams make_exact(const Rational& a1, const Rational& a2);
ExactParams make_exact(const Rational& a1, const Rational& a2, const Rational& a3);

Params to_double(const ExactParams& p);
/// alpha1 and alpha2 are converted exactly from their binary values; alpha3 is
/// recomputed so the exact sum is 1.
ExactParams to_exact(const Params& p);

template <class Scalar>
bool is_generic(const ParameterTriple<Scalar>& p) {
  return !is_integer_value(p[0]) && !is_integer_value(p[1]) &&
         !is_integer_value(p[2]);
}

// ---------------------------------------------------------------------------
// Sign cases

enum class SignCase { PPP, PPM, MPP, PMP, MMP, PMM, MPM };

inline constexpr std::array<SignCase, 7> kAllSignCases{
    SignCase::PPP, SignCase::PPM, SignCase::MPP, SignCase::PMP,
    SignCase::MMP, SignCase::PMM, SignCase::MPM};

SignCase sign_case_from_signs(int s1, int s2, int s3);
std::string to_string(SignCase c);
SignCase parse_sign_case(const std::string& text);
/// Sign case of the parameters after the cyclic symmetry, which sends
/// (alpha1, alpha2, alpha3) to (alpha2, alpha3, alpha1).
SignCase rotate(SignCase c);
/// Sign of alpha_i (i = 0..2) in the case.
int case_sign(SignCase c, int i);

template <class Scalar>
SignCase sign_case(const ParameterTriple<Scalar>& p) {
  for (int i = 0; i < 3; ++i) {
    if (is_zero_value(p[i]))
      throw Error(ErrorKind::ZeroParameter,
                  "alpha" + std::to_string(i + 1) + " vanishes");
  }
  return sign_case_from_signs(sign_of(p[0]), sign_of(p[1]), sign_of(p[2]));
}

// ---------------------------------------------------------------------------
// Parameter-plane coordinates

struct XiEta {
  double xi = 0;
  double eta = 0;
};

Params alpha_from_xi_eta(const XiEta& p);
XiEta xi_eta_from_alpha(const Params& p);

// ---------------------------------------------------------------------------
// Correspondence with P_IV:  w(z) = -sqrt(2) f_i(x),  z = x / sqrt(2).

template <class Scalar>
struct P4Parameters {
  Scalar alpha;
  Scalar beta;  // always <= 0
};

/// component is 1-based. Component i gives alpha = alpha_{i+2} - alpha_{i+1}
/// (indices mod 3) and beta = -2 alpha_i^2.
template <class Scalar>
P4Parameters<Scalar> p4_parameters(const ParameterTriple<Scalar>& p,
                                   int component) {
  if (component < 1 || component > 3)
    throw Error(ErrorKind::PreconditionFailed, "component must be 1, 2 or 3");
  const int i = component - 1;
  Scalar alpha = p[(i + 2) % 3] - p[(i + 1) % 3];
  Scalar beta = -2 * p[i] * p[i];
  return {alpha, beta};
}

struct SystemState {
  double x = 0;
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
};

struct P4Point {
  double z = 0;
  double w = 0;
  double alpha = 0;
  double beta = 0;
};

P4Point to_p4_point(const SystemState& s, const Params& p, int component);

// ---------------------------------------------------------------------------
// Text forms

/// `a1,a2,a3` with 17 significant digits.
std::string format_params(const Params& p);
/// Accepts `a1,a2` or `a1,a2,a3`; entries may be decimals or fractions.
Params parse_params(const std::string& text);
ExactParams parse_exact_params(const std::string& text);
Rational parse_rational(const std::string& token);
std::string format_double(double v);

}  // namespace spiv
