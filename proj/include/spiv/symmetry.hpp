#pragma once

// The extended affine Weyl group generated by
//
//   sigma: (a1, a2, a3) -> (a2, a3, a1),        f -> (f2, f3, f1)
//   tau:   (a1, a2, a3) -> (-a1, a2 + a1, a3 + a1),
//          f -> (f1, f2 + a1 / f1, f3 - a1 / f1)
//
// Words are stored left to right and act right to left: the text `t s s t`
// is tau sigma^2 tau, so its rightmost `t` acts first.

#include <string>
#include <utility>
#include <vector>

#include "spiv/core.hpp"

namespace spiv {

enum class Generator { Sigma, Tau };

using GroupWord = std::vector<Generator>;

/// Space separated `s`/`t` letters.
std::string format_word(const GroupWord& w);
/// Accepts letters s/t (or σ/τ) with optional separators, and `id` or an
/// empty string for the identity.
GroupWord parse_word(const std::string& text);
GroupWord inverse(const GroupWord& w);
/// w1 w2 (w2 acts first).
GroupWord compose(const GroupWord& w1, const GroupWord& w2);

/// The reflection changing the sign of alpha_k: tau_1 = t, tau_2 = s s t s,
/// tau_3 = s t s s.
GroupWord reflection_word(int k);

// ---------------------------------------------------------------------------
// Action on parameters

template <class Scalar>
ParameterTriple<Scalar> act_on_alpha(Generator g, const ParameterTriple<Scalar>& p) {
  if (g == Generator::Sigma) return {{p[1], p[2], p[0]}};
  return {{Scalar(-p[0]), Scalar(p[1] + p[0]), Scalar(p[2] + p[0])}};
}

template <class Scalar>
ParameterTriple<Scalar> act_on_alpha(const GroupWord& w, ParameterTriple<Scalar> p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = act_on_alpha(*it, p);
  return p;
}

/// Closed form of the reflection tau_k on parameters: alpha_k changes sign and
/// is added to the other two.
template <class Scalar>
ParameterTriple<Scalar> reflect(int k, const ParameterTriple<Scalar>& p) {
  const int i = k - 1;
  ParameterTriple<Scalar> out = p;
  out[i] = -p[i];
  out[(i + 1) % 3] = p[(i + 1) % 3] + p[i];
  out[(i + 2) % 3] = p[(i + 2) % 3] + p[i];
  return out;
}

// ---------------------------------------------------------------------------
// Action on solutions. Triple is any type with operator[] over three
// components of a field-like type (double, rational functions, ...); the
// caller supplies the pivot test that guards the division in tau.

template <class Triple, class Scalar, class PivotCheck>
std::pair<Triple, ParameterTriple<Scalar>> act_on_triple(Generator g, Triple f,
                                                          ParameterTriple<Scalar> p,
                                                          PivotCheck&& check) {
  if (g == Generator::Sigma) {
    Triple out = f;
    out[0] = f[1];
    out[1] = f[2];
    out[2] = f[0];
    return {out, act_on_alpha(g, p)};
  }
  check(f[0]);
  auto q = p[0] / f[0];
  f[1] = f[1] + q;
  f[2] = f[2] - q;
  return {f, act_on_alpha(g, p)};
}

template <class Triple, class Scalar, class PivotCheck>
std::pair<Triple, ParameterTriple<Scalar>> act_on_triple(const GroupWord& w, Triple f,
                                                          ParameterTriple<Scalar> p,
                                                          PivotCheck&& check) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto r = act_on_triple(*it, std::move(f), std::move(p), check);
    f = std::move(r.first);
    p = std::move(r.second);
  }
  return {std::move(f), std::move(p)};
}

/// Pointwise action on a numeric state. Throws PoleOfTransform when a tau
/// meets |f1| <= pivot_tol.
std::pair<SystemState, Params> act_pointwise(const GroupWord& w, const SystemState& s,
                                             const Params& p, double pivot_tol = 1e-14);

// ---------------------------------------------------------------------------
// Alcove reduction

template <class Scalar>
struct Reduction {
  GroupWord word;  // act_on_alpha(word, p) == image
  ParameterTriple<Scalar> image;
};

inline constexpr int kReductionCap = 10000;

/// Greedy descent to the all-positive alcove: while some alpha_i < 0 apply
/// tau_i to the most negative one (lowest index on ties).
template <class Scalar>
Reduction<Scalar> reduce_to_positive(const ParameterTriple<Scalar>& p) {
  if (!is_generic(p))
    throw Error(ErrorKind::NonGenericParameters, "an alpha_i is an integer");
  Reduction<Scalar> r{{}, p};
  for (int iter = 0; iter < kReductionCap; ++iter) {
    int worst = -1;
    for (int i = 0; i < 3; ++i)
      if (r.image[i] < 0 && (worst < 0 || r.image[i] < r.image[worst])) worst = i;
    if (worst < 0) return r;
    r.word = compose(reflection_word(worst + 1), r.word);
    r.image = reflect(worst + 1, r.image);
  }
  throw Error(ErrorKind::ReductionCapExceeded, "alcove reduction did not terminate");
}

}  // namespace spiv
