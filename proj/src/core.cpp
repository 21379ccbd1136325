#include "spiv/core.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace spiv {

const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::ChartSingular: return "ChartSingular";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::UntabulatedPair: return "UntabulatedPair";
    case ErrorKind::MissingZeroData: return "MissingZeroData";
    case ErrorKind::NonGenericParameters: return "NonGenericParameters";
    case ErrorKind::ReductionCapExceeded: return "ReductionCapExceeded";
    case ErrorKind::PoleOfTransform: return "PoleOfTransform";
    case ErrorKind::IdenticallyZeroPivot: return "IdenticallyZeroPivot";
    case ErrorKind::NonSimplePole: return "NonSimplePole";
    case ErrorKind::InverseUndefined: return "InverseUndefined";
    case ErrorKind::BracketLost: return "BracketLost";
    case ErrorKind::NoInteriorPoint: return "NoInteriorPoint";
    case ErrorKind::IntermediatePole: return "IntermediatePole";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Params make_params(double a1, double a2) { return Params{{a1, a2, 1.0 - a1 - a2}}; }

Params make_params(double a1, double a2, double a3) {
  if (std::abs(a1 + a2 + a3 - 1.0) > kSumTolerance)
    throw Error(ErrorKind::ConstraintViolation,
                "parameters must sum to 1 (got " + format_double(a1 + a2 + a3) + ")");
  return Params{{a1, a2, a3}};
}

namespace {

// Rational(n, d) is not reduced by GMP, and comparisons assume reduced form.
Rational canonical(Rational v) {
  v.canonicalize();
  return v;
}

}  // namespace

ExactParams make_exact(const Rational& a1, const Rational& a2) {
  return make_exact(a1, a2, 1 - canonical(a1) - canonical(a2));
}

ExactParams make_exact(const Rational& a1, const Rational& a2, const Rational& a3) {
  ExactParams p{{canonical(a1), canonical(a2), canonical(a3)}};
  if (p.sum() != 1)
    throw Error(ErrorKind::ConstraintViolation, "exact parameters must sum to 1");
  return p;
}

Params to_double(const ExactParams& p) {
  return Params{{to_double(p[0]), to_double(p[1]), to_double(p[2])}};
}

ExactParams to_exact(const Params& p) {
  return make_exact(Rational(p[0]), Rational(p[1]));
}

// ---------------------------------------------------------------------------

SignCase sign_case_from_signs(int s1, int s2, int s3) {
  const int key = (s1 > 0) * 4 + (s2 > 0) * 2 + (s3 > 0);
  switch (key) {
    case 7: return SignCase::PPP;
    case 6: return SignCase::PPM;
    case 3: return SignCase::MPP;
    case 5: return SignCase::PMP;
    case 1: return SignCase::MMP;
    case 4: return SignCase::PMM;
    case 2: return SignCase::MPM;
    default:
      throw Error(ErrorKind::ConstraintViolation,
                  "all-negative parameters cannot sum to 1");
  }
}

int case_sign(SignCase c, int i) {
  const std::string s = to_string(c);
  return s[i] == '+' ? 1 : -1;
}

std::string to_string(SignCase c) {
  switch (c) {
    case SignCase::PPP: return "+++";
    case SignCase::PPM: return "++-";
    case SignCase::MPP: return "-++";
    case SignCase::PMP: return "+-+";
    case SignCase::MMP: return "--+";
    case SignCase::PMM: return "+--";
    case SignCase::MPM: return "-+-";
  }
  return "?";
}

SignCase parse_sign_case(const std::string& text) {
  for (SignCase c : kAllSignCases)
    if (to_string(c) == text) return c;
  throw Error(ErrorKind::ParseError, "unknown sign case '" + text + "'");
}

SignCase rotate(SignCase c) {
  return sign_case_from_signs(case_sign(c, 1), case_sign(c, 2), case_sign(c, 0));
}

// ---------------------------------------------------------------------------

Params alpha_from_xi_eta(const XiEta& p) {
  const double h = std::sqrt(3.0) / 2.0;
  const double a1 = 1.0 / 3.0 + p.xi;
  const double a2 = 1.0 / 3.0 - 0.5 * p.xi + h * p.eta;
  return Params{{a1, a2, 1.0 - a1 - a2}};
}

XiEta xi_eta_from_alpha(const Params& p) {
  return XiEta{p[0] - 1.0 / 3.0, (p[1] - p[2]) / std::sqrt(3.0)};
}

P4Point to_p4_point(const SystemState& s, const Params& p, int component) {
  const auto pp = p4_parameters(p, component);
  return P4Point{s.x / std::sqrt(2.0), -std::sqrt(2.0) * s.f[component - 1],
                 pp.alpha, pp.beta};
}

double to_double(const Rational& v) {
  const double d = v.get_d();
  if (!std::isfinite(d)) return d;
  const double up = std::nextafter(d, sgn(v) >= 0 ? INFINITY : -INFINITY);
  if (!std::isfinite(up)) return d;
  const Rational err_d = abs(Rational(d) - v);
  const Rational err_up = abs(Rational(up) - v);
  return err_up < err_d ? up : d;
}

// ---------------------------------------------------------------------------

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_params(const Params& p) {
  return format_double(p[0]) + "," + format_double(p[1]) + "," + format_double(p[2]);
}

Rational parse_rational(const std::string& raw) {
  std::string token;
  for (char ch : raw)
    if (ch != ' ' && ch != '\t') token += ch;
  if (token.empty()) throw Error(ErrorKind::ParseError, "empty number");
  try {
    if (token.find('/') != std::string::npos) {
      Rational q(token, 10);
      q.canonicalize();
      return q;
    }
    // Decimal (optionally with exponent) converted exactly.
    std::string mantissa = token;
    long exponent = 0;
    if (auto e = token.find_first_of("eE"); e != std::string::npos) {
      mantissa = token.substr(0, e);
      exponent = std::stol(token.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char ch : mantissa) {
      if (ch == '.') {
        if (seen_point) throw Error(ErrorKind::ParseError, "bad number '" + raw + "'");
        seen_point = true;
      } else if (ch >= '0' && ch <= '9') {
        digits += ch;
        if (seen_point) ++frac_digits;
      } else {
        throw Error(ErrorKind::ParseError, "bad number '" + raw + "'");
      }
    }
    if (digits.empty()) throw Error(ErrorKind::ParseError, "bad number '" + raw + "'");
    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long shift = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad number '" + raw + "'");
  }
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

ExactParams parse_exact_params(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() == 2) return make_exact(parse_rational(parts[0]), parse_rational(parts[1]));
  if (parts.size() == 3)
    return make_exact(parse_rational(parts[0]), parse_rational(parts[1]),
                      parse_rational(parts[2]));
  throw Error(ErrorKind::ParseError, "expected a1,a2 or a1,a2,a3 but got '" + text + "'");
}

Params parse_params(const std::string& text) {
  const auto parts = split_commas(text);
  std::vector<double> v;
  for (const auto& p : parts) v.push_back(to_double(parse_rational(p)));
  if (v.size() == 2) return make_params(v[0], v[1]);
  if (v.size() == 3) return make_params(v[0], v[1], v[2]);
  throw Error(ErrorKind::ParseError, "expected a1,a2 or a1,a2,a3 but got '" + text + "'");
}

}  // namespace spiv
