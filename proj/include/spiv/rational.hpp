#pragma once

// Exact rational solutions: the two fundamental solutions, their images under
// the symmetry group, the f1 = 0 family at integer alpha2, the real
// singularity sequence of a rational triple and the polynomial relations
// tying its components together.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spiv/core.hpp"
#include "spiv/polynomial.hpp"
#include "spiv/sequences.hpp"
#include "spiv/symmetry.hpp"

namespace spiv {

struct RationalTriple {
  std::array<RatFunc, 3> f;
  ExactParams params;

  const RatFunc& operator[](std::size_t i) const { return f[i]; }
  RatFunc& operator[](std::size_t i) { return f[i]; }
};

/// f = (x/3, x/3, x/3) at (1/3, 1/3, 1/3).
RationalTriple fundamental_first();
/// f = (x, 0, 0) at (1, 0, 0).
RationalTriple fundamental_second();

/// f_i' - f_i (f_{i+1} - f_{i+2}) - alpha_i for each component.
std::array<RatFunc, 3> spiv_residuals(const RationalTriple& r);

struct ResidualReport {
  bool zero = true;
  int component = 0;  // first nonzero component (1..3) when !zero
  RatFunc residual;
};

ResidualReport verify_spiv(const RationalTriple& r);
bool satisfies_constraint(const RationalTriple& r);

/// Throws IdenticallyZeroPivot when a tau along the word meets f1 == 0.
RationalTriple act_on_rational(const GroupWord& w, const RationalTriple& r);

/// The solution with f1 = 0 at alpha = (0, alpha2, 1 - alpha2), built from
/// the polynomial solutions of the linearised Riccati equation.
RationalTriple hermite_family(long alpha2);

// ---------------------------------------------------------------------------
// Real roots

struct RootInterval {
  Rational lo, hi;  // root in [lo, hi]; lo == hi for an exact rational root
  double value = 0;
};

/// Number of distinct real roots of p in (a, b], by Sturm's theorem.
int sturm_count(const Poly& p, const Rational& a, const Rational& b);
/// Isolated real roots of a nonzero polynomial, ascending, each interval
/// refined to width <= width.
std::vector<RootInterval> real_roots(const Poly& p, double width = 1e-12);

struct PoleInfo {
  double x = 0;
  int type = 0;                    // k of A_k
  std::array<double, 3> residues;  // 0 for the regular component
};

struct SingularityProfile {
  SymbolSequence sequence;
  std::vector<PoleInfo> poles;
};

/// Poles come from the real roots of the denominators; a pole where f_k stays
/// finite and the other two components have residues +1 (f_{k+1}) and -1
/// (f_{k+2}) is A_k. The ends follow from the leading behaviour at infinity.
/// Throws NonSimplePole for a multiple real pole and PreconditionFailed when
/// a pole or end matches no known pattern.
SingularityProfile singularity_profile(const RationalTriple& r);

// ---------------------------------------------------------------------------
// Polynomial identities

/// Applies the inverse of w to indeterminates f1, f2, f3 and returns the
/// relations saying the result is the fundamental solution: equal components
/// (first hierarchy) or the two components vanishing at the base point
/// (second hierarchy), cleared of denominators and of factors that are
/// pivots of the inverse word. Each relation is checked against r.
std::vector<MvPoly> extract_identities(const GroupWord& w, const RationalTriple& r);

bool same_up_to_scaling(const MvPoly& a, const MvPoly& b);

/// Parses text such as `9*f1^2*f2^2 - 9*f1^2*f2*f3 + 8`.
MvPoly parse_mvpoly(const std::string& text);

/// Reference relations for the tau sigma^2 tau solution and for the
/// sigma tau sigma^2 tau sigma^2 tau sigma tau sigma tau solution.
std::vector<MvPoly> reference_first_identities();
std::vector<MvPoly> reference_second_identities();

/// Reference forms of the tau sigma^2 tau triple and of the (2, 2, -3) triple.
RationalTriple reference_first_solution();
RationalTriple reference_second_solution();

}  // namespace spiv
