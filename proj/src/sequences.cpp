#include "spiv/sequences.hpp"

#include <array>
#include <map>
#include <sstream>

namespace spiv {

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::C: return "C";
    case Symbol::A1: return "A1";
    case Symbol::A2: return "A2";
    case Symbol::A3: return "A3";
    case Symbol::B1: return "B1";
    case Symbol::B2: return "B2";
    case Symbol::B3: return "B3";
    case Symbol::Open: return "...";
  }
  return "?";
}

Symbol parse_symbol(const std::string& text) {
  for (auto s : {Symbol::C, Symbol::A1, Symbol::A2, Symbol::A3, Symbol::B1, Symbol::B2,
                 Symbol::B3, Symbol::Open})
    if (to_string(s) == text) return s;
  throw Error(ErrorKind::ParseError, "unknown symbol '" + text + "'");
}

int symbol_index(Symbol s) {
  switch (s) {
    case Symbol::A1: case Symbol::B1: return 1;
    case Symbol::A2: case Symbol::B2: return 2;
    case Symbol::A3: case Symbol::B3: return 3;
    default: return 0;
  }
}

Symbol pole_symbol(int k) {
  static constexpr std::array<Symbol, 3> s{Symbol::A1, Symbol::A2, Symbol::A3};
  return s.at(k - 1);
}

Symbol b_symbol(int k) {
  static constexpr std::array<Symbol, 3> s{Symbol::B1, Symbol::B2, Symbol::B3};
  return s.at(k - 1);
}

std::vector<Symbol> SymbolSequence::symbols() const {
  std::vector<Symbol> out;
  out.reserve(interior.size() + 2);
  out.push_back(left);
  out.insert(out.end(), interior.begin(), interior.end());
  out.push_back(right);
  return out;
}

std::string to_string(const SymbolSequence& s) {
  std::string out;
  for (Symbol x : s.symbols()) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

SymbolSequence parse_sequence(const std::string& text) {
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < text.size();) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == ',') {
      ++i;
    } else if (text.compare(i, 3, "...") == 0) {
      syms.push_back(Symbol::Open);
      i += 3;
    } else if (ch == 'C') {
      syms.push_back(Symbol::C);
      ++i;
    } else if ((ch == 'A' || ch == 'B') && i + 1 < text.size() && text[i + 1] >= '1' &&
               text[i + 1] <= '3') {
      const int k = text[i + 1] - '0';
      syms.push_back(ch == 'A' ? pole_symbol(k) : b_symbol(k));
      i += 2;
    } else {
      throw Error(ErrorKind::ParseError, "cannot parse sequence '" + text + "'");
    }
  }
  if (syms.size() < 2) throw Error(ErrorKind::ParseError, "sequence needs two ends: '" + text + "'");
  SymbolSequence s;
  s.left = syms.front();
  s.right = syms.back();
  for (std::size_t i = 1; i + 1 < syms.size(); ++i) {
    if (!is_pole(syms[i]))
      throw Error(ErrorKind::ParseError, "interior symbols must be poles: '" + text + "'");
    s.interior.push_back(syms[i]);
  }
  if (is_pole(s.left) || is_pole(s.right))
    throw Error(ErrorKind::ParseError, "ends must be C, B1..B3 or ...: '" + text + "'");
  return s;
}

// ---------------------------------------------------------------------------
// Tables. Rows are the earlier symbol, columns the later one, both in the
// order C, A1, A2, A3 (first table) or C, B1, B2, B3 (second table). An entry
// lists the components changing sign; X marks a forbidden transition and
// `-` an allowed one with no sign change.

namespace {

struct Block {
  SignCase c;
  const char* rows[4];
};

const Block kPoleTable[] = {
    {SignCase::PPP, {"123 13 12 23", "13 X 1 3", "12 1 X 2", "23 3 2 X"}},
    {SignCase::PPM, {"X X 12 2", "X X 1 -", "12 1 123 23", "2 - 23 X"}},
    {SignCase::MPP, {"X 3 X 23", "3 X - 13", "X - X 2", "23 13 2 123"}},
    {SignCase::PMP, {"X 13 1 X", "13 123 12 3", "1 12 X -", "X 3 - X"}},
    {SignCase::MMP, {"X 3 X X", "3 123 2 3", "X 2 X -", "X 3 - X"}},
    {SignCase::PMM, {"X X 1 X", "X X 1 -", "1 1 123 3", "X - 3 X"}},
    {SignCase::MPM, {"X X X 2", "X X - 1", "X - X 2", "2 1 2 123"}},
};

const Block kBTable[] = {
    {SignCase::PPP, {"123 12 23 13", "12 X 2 1", "23 2 X 3", "13 1 3 X"}},
    {SignCase::PPM, {"X X 2 X", "X X 2 X", "2 2 X -", "X X - X"}},
    {SignCase::MPP, {"X X X 3", "X X X -", "X X X 3", "3 - 3 X"}},
    {SignCase::PMP, {"X 1 X X", "1 X - 1", "X - X X", "X 1 X X"}},
    {SignCase::MMP, {"X X X X", "X X X -", "X X X X", "X - X X"}},
    {SignCase::PMM, {"X X X X", "X X - X", "X - X X", "X X X X"}},
    {SignCase::MPM, {"X X X X", "X X X X", "X X X -", "X X - X"}},
};

using Grid = std::array<std::array<TransitionRule, 4>, 4>;

TransitionRule parse_cell(const std::string& cell) {
  if (cell == "X") return {false, 0};
  if (cell == "-") return {true, 0};
  unsigned mask = 0;
  for (char ch : cell) mask |= 1u << (ch - '1');
  return {true, mask};
}

std::map<SignCase, Grid> build(const Block* blocks, std::size_t n) {
  std::map<SignCase, Grid> out;
  for (std::size_t b = 0; b < n; ++b) {
    Grid g;
    for (int r = 0; r < 4; ++r) {
      std::istringstream row(blocks[b].rows[r]);
      std::string cell;
      for (int c = 0; c < 4; ++c) {
        row >> cell;
        g[r][c] = parse_cell(cell);
      }
    }
    out[blocks[b].c] = g;
  }
  return out;
}

const std::map<SignCase, Grid>& pole_table() {
  static const auto t = build(kPoleTable, std::size(kPoleTable));
  return t;
}

const std::map<SignCase, Grid>& b_table() {
  static const auto t = build(kBTable, std::size(kBTable));
  return t;
}

}  // namespace

bool is_tabulated(Symbol from, Symbol to) {
  if (from == Symbol::Open || to == Symbol::Open) return false;
  const bool a = is_pole(from) || is_pole(to);
  const bool b = is_b(from) || is_b(to);
  return !(a && b);
}

TransitionRule transition_rule(SignCase c, Symbol from, Symbol to) {
  if (!is_tabulated(from, to))
    throw Error(ErrorKind::UntabulatedPair,
                "no rule for " + to_string(from) + " -> " + to_string(to));
  const bool poles = is_pole(from) || is_pole(to);
  const auto& table = poles ? pole_table() : b_table();
  return table.at(c)[symbol_index(from)][symbol_index(to)];
}

Symbol sigma_symbol(Symbol s) {
  const int k = symbol_index(s);
  if (k == 0) return s;
  const int k1 = k == 1 ? 3 : k - 1;
  return is_pole(s) ? pole_symbol(k1) : b_symbol(k1);
}

unsigned sigma_mask(unsigned m) { return ((m >> 1) | ((m & 1u) << 2)) & 7u; }

std::string format_mask(unsigned mask) {
  std::string out;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) out += static_cast<char>('1' + i);
  return out.empty() ? "-" : out;
}

std::vector<std::string> check_sigma_orbits() {
  std::vector<std::string> problems;
  const std::array<std::array<Symbol, 4>, 2> families{
      {{Symbol::C, Symbol::A1, Symbol::A2, Symbol::A3},
       {Symbol::C, Symbol::B1, Symbol::B2, Symbol::B3}}};
  for (const auto& syms : families) {
    for (SignCase c : kAllSignCases) {
      for (Symbol from : syms) {
        for (Symbol to : syms) {
          const TransitionRule r = transition_rule(c, from, to);
          const TransitionRule img =
              transition_rule(rotate(c), sigma_symbol(from), sigma_symbol(to));
          const TransitionRule want{r.allowed, r.allowed ? sigma_mask(r.sign_changes) : 0u};
          if (!(img == want))
            problems.push_back(to_string(c) + " " + to_string(from) + "->" + to_string(to));
        }
      }
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------

Validation validate_sequence(const SymbolSequence& s, const Params& p) {
  const SignCase c = sign_case(p);
  const auto syms = s.symbols();
  for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
    if (!is_tabulated(syms[i], syms[i + 1])) continue;
    const TransitionRule r = transition_rule(c, syms[i], syms[i + 1]);
    if (!r.allowed)
      return {false, i,
              to_string(syms[i]) + " -> " + to_string(syms[i + 1]) + " is excluded for " +
                  to_string(c)};
  }
  return {};
}

namespace {

Symbol tau_end(Symbol s) {
  if (s == Symbol::B2) return Symbol::B3;
  if (s == Symbol::B3) return Symbol::B2;
  return s;
}

SymbolSequence apply_sigma(const SymbolSequence& s) {
  SymbolSequence out;
  out.left = sigma_symbol(s.left);
  out.right = sigma_symbol(s.right);
  for (Symbol x : s.interior) out.interior.push_back(sigma_symbol(x));
  for (const auto& g : s.gaps) out.gaps.push_back({sigma_mask(g.known), sigma_mask(g.zeros)});
  return out;
}

SymbolSequence apply_tau(const SymbolSequence& s, SignCase c) {
  const auto syms = s.symbols();
  const std::size_t n_gaps = syms.size() - 1;

  // -1 unknown, otherwise whether f1 changes sign in the gap.
  std::vector<int> z1(n_gaps);
  for (std::size_t i = 0; i < n_gaps; ++i) {
    if (!s.gaps.empty() && (s.gaps[i].known & 1u)) {
      z1[i] = static_cast<int>(s.gaps[i].zeros & 1u);
    } else if (syms[i] == Symbol::Open || syms[i + 1] == Symbol::Open) {
      z1[i] = -1;
    } else if (!is_tabulated(syms[i], syms[i + 1])) {
      throw Error(ErrorKind::MissingZeroData, "no zero data between " + to_string(syms[i]) +
                                                  " and " + to_string(syms[i + 1]));
    } else {
      const TransitionRule r = transition_rule(c, syms[i], syms[i + 1]);
      if (!r.allowed)
        throw Error(ErrorKind::MissingZeroData,
                    "excluded transition " + to_string(syms[i]) + " -> " +
                        to_string(syms[i + 1]) + " has no zero data");
      z1[i] = static_cast<int>(r.sign_changes & 1u);
    }
  }

  SymbolSequence out;
  out.left = tau_end(s.left);
  out.right = tau_end(s.right);
  GapMarks cur{1u, 0u};
  auto close_gap = [&] {
    out.gaps.push_back(cur);
    cur = {1u, 0u};
  };
  for (std::size_t i = 0; i < n_gaps; ++i) {
    if (z1[i] < 0) {
      cur = {0u, 0u};
    } else if (z1[i] == 1) {
      out.interior.push_back(Symbol::A1);
      close_gap();
    }
    if (i + 1 == n_gaps) break;
    const Symbol next = syms[i + 1];
    if (next == Symbol::A1) {
      cur.zeros ^= cur.known & 1u;
    } else {
      out.interior.push_back(next);
      close_gap();
    }
  }
  out.gaps.push_back(cur);
  return out;
}

}  // namespace

std::pair<SymbolSequence, Params> transform_sequence(const SymbolSequence& s, const Params& p,
                                                     Generator g) {
  if (g == Generator::Sigma) return {apply_sigma(s), act_on_alpha(g, p)};
  return {apply_tau(s, sign_case(p)), act_on_alpha(g, p)};
}

std::pair<SymbolSequence, Params> transform_sequence(SymbolSequence s, Params p,
                                                     const GroupWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) std::tie(s, p) = transform_sequence(s, p, *it);
  return {s, p};
}

bool is_admissible(const SymbolSequence& s, const Params& p, int depth) {
  if (!validate_sequence(s, p).valid) return false;
  if (depth <= 0) return true;
  for (int k = 1; k <= 3; ++k) {
    SymbolSequence img;
    Params q;
    try {
      std::tie(img, q) = transform_sequence(s, p, reflection_word(k));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MissingZeroData) return false;
      throw;
    }
    if (!is_admissible(img, q, depth - 1)) return false;
  }
  return true;
}

Params representative(SignCase c) {
  switch (c) {
    case SignCase::PPP: return make_params(1.0 / 3, 1.0 / 3);
    case SignCase::PPM: return make_params(2.0 / 3, 2.0 / 3);
    case SignCase::MPP: return make_params(-1.0 / 3, 2.0 / 3);
    case SignCase::PMP: return make_params(2.0 / 3, -1.0 / 3);
    case SignCase::MMP: return make_params(-1.0 / 3, -1.0 / 3);
    case SignCase::PMM: return make_params(5.0 / 3, -1.0 / 3);
    case SignCase::MPM: return make_params(-1.0 / 3, 5.0 / 3);
  }
  return make_params(1.0 / 3, 1.0 / 3);
}

namespace {

void grow(SymbolSequence& s, bool to_right, int remaining, const Params& p, int depth,
          std::vector<SymbolSequence>& out) {
  if (remaining == 0) {
    out.push_back(s);
    return;
  }
  for (int k = 1; k <= 3; ++k) {
    if (to_right)
      s.interior.push_back(pole_symbol(k));
    else
      s.interior.insert(s.interior.begin(), pole_symbol(k));
    if (is_admissible(s, p, depth)) grow(s, to_right, remaining - 1, p, depth, out);
    if (to_right)
      s.interior.pop_back();
    else
      s.interior.erase(s.interior.begin());
  }
}

void grow_finite(SymbolSequence& open, int remaining, const Params& p, int depth,
                 std::vector<SymbolSequence>& out) {
  SymbolSequence closed = open;
  closed.right = Symbol::C;
  if (is_admissible(closed, p, depth)) out.push_back(closed);
  if (remaining == 0) return;
  for (int k = 1; k <= 3; ++k) {
    open.interior.push_back(pole_symbol(k));
    if (is_admissible(open, p, depth)) grow_finite(open, remaining - 1, p, depth, out);
    open.interior.pop_back();
  }
}

}  // namespace

std::vector<SymbolSequence> enumerate_finite(const Params& p, int max_interior, int depth) {
  std::vector<SymbolSequence> out;
  SymbolSequence open{Symbol::C, {}, Symbol::Open, {}};
  grow_finite(open, max_interior, p, depth, out);
  return out;
}

std::vector<SymbolSequence> enumerate_finite(SignCase c, int max_interior, int depth) {
  return enumerate_finite(representative(c), max_interior, depth);
}

std::vector<SymbolSequence> extend_open(const SymbolSequence& seed, const Params& p, int count,
                                        int depth) {
  if (seed.left != Symbol::Open && seed.right != Symbol::Open)
    throw Error(ErrorKind::PreconditionFailed, "seed sequence has no open end");
  std::vector<SymbolSequence> out;
  SymbolSequence s = seed;
  s.gaps.clear();
  if (!is_admissible(s, p, depth)) return out;
  grow(s, seed.right == Symbol::Open, count, p, depth, out);
  return out;
}

SymbolSequence unique_finite_sequence(const Params& p) {
  if (!is_generic(p))
    throw Error(ErrorKind::NonGenericParameters, "an alpha_i is an integer");
  const auto red = reduce_to_positive(p);
  SymbolSequence cc{Symbol::C, {}, Symbol::C, {}};
  return transform_sequence(cc, red.image, inverse(red.word)).first;
}

}  // namespace spiv
