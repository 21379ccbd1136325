#include "spiv/symmetry.hpp"

#include <cmath>

namespace spiv {

std::string format_word(const GroupWord& w) {
  std::string out;
  for (Generator g : w) {
    if (!out.empty()) out += ' ';
    out += g == Generator::Sigma ? 's' : 't';
  }
  return out;
}

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  if (text == "id") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == 's' || ch == 'S') {
      w.push_back(Generator::Sigma);
    } else if (ch == 't' || ch == 'T') {
      w.push_back(Generator::Tau);
    } else if (text.compare(i, 2, "σ") == 0) {
      w.push_back(Generator::Sigma);
      ++i;
    } else if (text.compare(i, 2, "τ") == 0) {
      w.push_back(Generator::Tau);
      ++i;
    } else if (ch != ' ' && ch != ',' && ch != '\t' && ch != '*' && ch != '.') {
      throw Error(ErrorKind::ParseError, "bad letter in word '" + text + "'");
    }
  }
  return w;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(*it);
    if (*it == Generator::Sigma) out.push_back(Generator::Sigma);
  }
  return out;
}

GroupWord compose(const GroupWord& w1, const GroupWord& w2) {
  GroupWord out = w1;
  out.insert(out.end(), w2.begin(), w2.end());
  return out;
}

GroupWord reflection_word(int k) {
  switch (k) {
    case 1: return parse_word("t");
    case 2: return parse_word("s s t s");
    case 3: return parse_word("s t s s");
  }
  throw Error(ErrorKind::PreconditionFailed, "reflection index must be 1..3");
}

std::pair<SystemState, Params> act_pointwise(const GroupWord& w, const SystemState& s,
                                             const Params& p, double pivot_tol) {
  auto check = [&](double f1) {
    if (!(std::abs(f1) > pivot_tol))
      throw Error(ErrorKind::PoleOfTransform,
                  "f1 vanishes at x = " + format_double(s.x));
  };
  auto [f, q] = act_on_triple(w, s.f, p, check);
  return {SystemState{s.x, f}, q};
}

}  // namespace spiv
