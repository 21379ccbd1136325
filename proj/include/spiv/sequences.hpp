#pragma once

// Singularity sequences and the transition rules between adjacent symbols.
//
// A solution is recorded as its left asymptotic class, the ordered pole types
// A_k met on the real line, and its right asymptotic class. Between two
// adjacent symbols the components that change sign are described by a
// bitmask (bit i-1 set for f_i).

#include <optional>
#include <string>
#include <vector>

#include "spiv/core.hpp"
#include "spiv/symmetry.hpp"

namespace spiv {

enum class Symbol { C, A1, A2, A3, B1, B2, B3, Open };

std::string to_string(Symbol s);
Symbol parse_symbol(const std::string& text);

inline bool is_pole(Symbol s) { return s == Symbol::A1 || s == Symbol::A2 || s == Symbol::A3; }
inline bool is_b(Symbol s) { return s == Symbol::B1 || s == Symbol::B2 || s == Symbol::B3; }
/// k in 1..3 for A_k and B_k, 0 otherwise.
int symbol_index(Symbol s);
Symbol pole_symbol(int k);
Symbol b_symbol(int k);

/// Zero data for the stretch between two adjacent symbols. `known` flags the
/// components whose sign-change status is recorded; `zeros` holds the status.
struct GapMarks {
  unsigned known = 0;
  unsigned zeros = 0;
  friend bool operator==(const GapMarks&, const GapMarks&) = default;
};

struct SymbolSequence {
  Symbol left = Symbol::C;
  std::vector<Symbol> interior;  // pole symbols only
  Symbol right = Symbol::C;
  /// Either empty (no zero data) or interior.size() + 1 entries.
  std::vector<GapMarks> gaps;

  bool is_finite() const { return left != Symbol::Open && right != Symbol::Open; }
  std::vector<Symbol> symbols() const;
  /// Equality of the symbols only; zero markers are ignored.
  bool same_symbols(const SymbolSequence& o) const {
    return left == o.left && right == o.right && interior == o.interior;
  }
};

/// `C A1 A2 A1 C`; an open end is written `...`.
std::string to_string(const SymbolSequence& s);
/// Inverse of to_string; also accepts the compact form `CA1A2A1C`.
SymbolSequence parse_sequence(const std::string& text);

// ---------------------------------------------------------------------------
// Transition tables

struct TransitionRule {
  bool allowed = false;
  unsigned sign_changes = 0;  // bitmask, meaningful when allowed
  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

/// Table lookup for an adjacent pair drawn from {C, A1, A2, A3} or from
/// {C, B1, B2, B3}. Throws UntabulatedPair for mixed A/B pairs or open ends.
TransitionRule transition_rule(SignCase c, Symbol from, Symbol to);
bool is_tabulated(Symbol from, Symbol to);

/// Image of a symbol under sigma (A_k -> A_{k-1}, B_k -> B_{k-1}).
Symbol sigma_symbol(Symbol s);
/// sigma on a component bitmask (f_i -> f_{i-1}).
unsigned sigma_mask(unsigned mask);

/// Checks that every table entry is carried to the matching entry of the
/// rotated sign case by sigma. Returns a description of each mismatch.
std::vector<std::string> check_sigma_orbits();

std::string format_mask(unsigned mask);

// ---------------------------------------------------------------------------

struct Validation {
  bool valid = true;
  std::size_t position = 0;  // index of the left symbol of the offending pair
  std::string reason;
};

/// Checks every adjacent pair against the transition table of sign_case(p).
/// Untabulated pairs (A next to B, or an open end) are skipped. Throws
/// ZeroParameter when some alpha_i vanishes.
Validation validate_sequence(const SymbolSequence& s, const Params& p);

/// Action of one generator on a sequence and its parameters. For tau the
/// sign changes of f1 in each gap come from the gap marks when recorded and
/// from the transition table otherwise (MissingZeroData when neither is
/// available). Gaps next to an open end cannot gain a pole.
std::pair<SymbolSequence, Params> transform_sequence(const SymbolSequence& s, const Params& p,
                                                     Generator g);
std::pair<SymbolSequence, Params> transform_sequence(SymbolSequence s, Params p,
                                                     const GroupWord& w);

/// Adjacency rules plus admissibility of every image under words of up to
/// `depth` reflections tau_1, tau_2, tau_3.
bool is_admissible(const SymbolSequence& s, const Params& p, int depth);

/// A parameter triple with the given sign pattern ((1/3,1/3,1/3) for +++).
Params representative(SignCase c);

/// All admissible sequences C ... C with at most max_interior poles.
std::vector<SymbolSequence> enumerate_finite(const Params& p, int max_interior, int depth);
std::vector<SymbolSequence> enumerate_finite(SignCase c, int max_interior, int depth);

/// All admissible ways of growing `seed` by `count` further poles on its open
/// side (the right side when seed.right is Open, else the left side).
std::vector<SymbolSequence> extend_open(const SymbolSequence& seed, const Params& p, int count,
                                        int depth);

/// The finite sequence realised at generic parameters p: reduce p to the
/// positive alcove and carry CC back along the inverse word.
SymbolSequence unique_finite_sequence(const Params& p);

}  // namespace spiv
