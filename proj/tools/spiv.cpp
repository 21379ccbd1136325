// Command-line front end.
//
//   spiv [--config FILE] <subcommand> [options]
//
// Exit status: 0 on success, 1 on a domain error (its name is printed on
// standard error), 2 on a usage error, including option values that do not
// parse.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spiv/explorer.hpp"
#include "spiv/io.hpp"
#include "spiv/rational.hpp"
#include "spiv/sequences.hpp"
#include "spiv/symmetry.hpp"

using namespace spiv;

namespace {

// key=value lines without a section apply to the subcommand being run;
// comma-separated values are kept as one string.
class PlainConfig : public CLI::ConfigTOML {
 public:
  explicit PlainConfig(std::string sub) : sub_(std::move(sub)) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& is) const override {
    auto items = CLI::ConfigTOML::from_config(is);
    for (auto& it : items) {
      if (it.name == "++" || it.name == "--") continue;
      if (it.parents.empty() && !sub_.empty()) it.parents = {sub_};
      if (it.inputs.size() > 1) it.inputs = {CLI::detail::join(it.inputs, ",")};
    }
    return items;
  }

 private:
  std::string sub_;
};

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, std::string("bad number in ") + what + ": " + tok);
    }
  }
  if (out.size() != n)
    throw Error(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(n) +
                                           " comma-separated numbers");
  return out;
}

Window parse_window(const std::string& text) {
  const auto w = parse_list(text, 4, "--window");
  if (!(w[0] < w[1]) || !(w[2] < w[3]))
    throw Error(ErrorKind::PreconditionFailed, "window bounds must be increasing");
  return {w[0], w[1], w[2], w[3]};
}

// Writes to the named file, or to standard output for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string compact(const SymbolSequence& s) {
  std::string t = to_string(s);
  std::erase(t, ' ');
  return t;
}

std::string mask_text(unsigned mask) {
  std::string s = "{";
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
  return s + "}";
}

struct Common {
  std::string alpha;
  std::string out = "-";
  double anchor = 0;
  double horizon = 10;
  int pole_cap = 10;
  int threads = 0;
  IntegratorOptions integ;
};

void add_integrator_options(CLI::App* app, Common& c) {
  app->add_option("--rtol", c.integ.rtol, "relative tolerance")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--atol", c.integ.atol, "absolute tolerance")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--switch", c.integ.switch_threshold, "enter a pole chart above this size")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--exit", c.integ.exit_threshold, "leave a pole chart below this size")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--event-tol", c.integ.tol_event, "event location tolerance")
      ->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real solutions of the symmetric Painleve IV system"};
  app.set_config("--config", "", "key=value file supplying option defaults (before the subcommand)");
  app.require_subcommand(1);

  Common c;
  // Options shared between subcommands but defaulting differently need their
  // own storage: CLI11 writes defaults when the option is registered.
  std::string integ_format = "csv", classify_format = "text", scan_format = "csv",
              cc_format = "csv", rat_format = "text", rat_alpha = "0,0.4,0.6";

  // integrate ---------------------------------------------------------------
  auto* integ = app.add_subcommand("integrate", "Integrate one solution through its poles");
  std::string f0_text, uv_text;
  double x0 = 0, x_to = 10;
  integ->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  integ->add_option("--x0", x0, "initial abscissa")->capture_default_str();
  integ->add_option("--f0", f0_text, "initial state f1,f2,f3 (must sum to x0)");
  integ->add_option("--uv", uv_text, "initial state as u,v on the plane f1+f2+f3 = x0");
  integ->add_option("--to", x_to, "final abscissa")->capture_default_str();
  integ->add_option("--pole-cap", c.pole_cap, "stop at this many poles")->capture_default_str()
      ->check(CLI::PositiveNumber);
  integ->add_option("--format", integ_format, "csv (samples) or json (events and classes)")
      ->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  integ->add_option("--out", c.out, "output file, - for standard output")->capture_default_str();
  add_integrator_options(integ, c);

  // classify ----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "Pole counts, end classes and sequence of one solution");
  classify->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  classify->add_option("--anchor", c.anchor, "abscissa of the initial condition")->capture_default_str();
  classify->add_option("--uv", uv_text, "initial state u,v")->required();
  classify->add_option("--horizon", c.horizon, "integrate to anchor +- horizon")
      ->capture_default_str()->check(CLI::PositiveNumber);
  classify->add_option("--pole-cap", c.pole_cap, "poles treated as infinitely many")
      ->capture_default_str()->check(CLI::PositiveNumber);
  classify->add_option("--format", classify_format, "text or json")->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  add_integrator_options(classify, c);

  // scan --------------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "Scan a grid of initial conditions");
  std::string window_text = "-3,3,-3,3";
  int res = 201, res_u = 0, res_v = 0;
  scan->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  scan->add_option("--anchor", c.anchor, "abscissa of the initial conditions")->capture_default_str();
  scan->add_option("--window", window_text, "u_lo,u_hi,v_lo,v_hi")->capture_default_str();
  scan->add_option("--res", res, "points per axis")->capture_default_str()->check(CLI::Range(2, 100000));
  scan->add_option("--res-u", res_u, "points along u (overrides --res)")->check(CLI::Range(2, 100000));
  scan->add_option("--res-v", res_v, "points along v (overrides --res)")->check(CLI::Range(2, 100000));
  scan->add_option("--horizon", c.horizon, "integrate to anchor +- horizon")
      ->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--pole-cap", c.pole_cap, "poles treated as infinitely many")
      ->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_option("--threads", c.threads, "worker threads (0: SPIV_THREADS or all cores)")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  scan->add_option("--format", scan_format, "csv or ppm")->capture_default_str()
      ->check(CLI::IsMember({"csv", "ppm"}));
  scan->add_option("--out", c.out, "output file, - for standard output")->capture_default_str();
  add_integrator_options(scan, c);

  // btob --------------------------------------------------------------------
  auto* btob = app.add_subcommand("btob", "Locate a B to B connecting orbit");
  std::string btob_window = "-3,3,-3,3", target;
  int seed_res = 21;
  BtoBOptions bo;
  btob->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  btob->add_option("--anchor", bo.anchor, "abscissa of the initial conditions")->capture_default_str();
  btob->add_option("--window", btob_window, "seed search window u_lo,u_hi,v_lo,v_hi")
      ->capture_default_str();
  btob->add_option("--res", seed_res, "seed grid points per axis")->capture_default_str()
      ->check(CLI::Range(2, 10000));
  btob->add_option("--target", target, "required end classes, e.g. B2,B3 (default: any B pair)");
  btob->add_option("--tol", bo.tol, "final quadrilateral perimeter")->capture_default_str()
      ->check(CLI::PositiveNumber);
  btob->add_option("--horizon", bo.horizon, "horizon for the outcome of each point")
      ->capture_default_str()->check(CLI::PositiveNumber);
  btob->add_option("--check-horizon", bo.check_horizon, "horizon for classifying the result")
      ->capture_default_str()->check(CLI::PositiveNumber);
  btob->add_option("--threads", bo.threads, "worker threads for corner classification")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  btob->add_option("--out", c.out, "JSON output file, - for standard output")->capture_default_str();

  // ccregion ----------------------------------------------------------------
  auto* cc = app.add_subcommand("ccregion", "Trace the boundary of the C to C region");
  CcRegionOptions co;
  std::string cc_window = "-3,3,-3,3";
  cc->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  cc->add_option("--anchor", co.anchor, "abscissa of the initial conditions")->capture_default_str();
  cc->add_option("--tol", co.tol, "bisection tolerance along each ray")->capture_default_str()
      ->check(CLI::PositiveNumber);
  cc->add_option("--rays", co.rays, "number of ray directions")->capture_default_str()
      ->check(CLI::Range(3, 100000));
  cc->add_option("--window", cc_window, "window of the scan for an interior point")
      ->capture_default_str();
  cc->add_option("--scan-res", co.scan_res, "points per axis of that scan")->capture_default_str()
      ->check(CLI::Range(2, 10000));
  cc->add_option("--horizon", co.horizon, "integrate to anchor +- horizon")->capture_default_str()
      ->check(CLI::PositiveNumber);
  cc->add_option("--threads", co.threads, "worker threads")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cc->add_option("--format", cc_format, "csv (boundary points) or json")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  cc->add_option("--out", c.out, "output file, - for standard output")->capture_default_str();

  // rational ----------------------------------------------------------------
  auto* rat = app.add_subcommand("rational", "Rational solutions from the fundamental ones");
  std::string word_text, base = "first", interval_text = "0.5,1.5";
  bool identities = false, profile = false, quartic = false;
  QuarticOptions qo;
  qo.f2 = 0.5;
  rat->add_option("--word", word_text, "group word such as \"t s s t\" (rightmost acts first)");
  rat->add_option("--base", base, "fundamental solution: first (x/3) or second (x,0,0)")
      ->capture_default_str()->check(CLI::IsMember({"first", "second"}));
  rat->add_flag("--identities", identities, "print the polynomial relations among f1, f2, f3");
  rat->add_flag("--profile", profile, "print the real poles and the singularity sequence");
  rat->add_flag("--quartic", quartic,
                "check the quartic relation on a numerically transformed Riccati solution");
  rat->add_option("--alpha", rat_alpha, "parameters (0,a2,a3) for --quartic")->capture_default_str();
  rat->add_option("--interval", interval_text, "x_lo,x_hi for --quartic")->capture_default_str();
  rat->add_option("--x0", qo.x0, "abscissa of the Riccati initial condition")->capture_default_str();
  rat->add_option("--f2", qo.f2, "f2(x0) of the Riccati solution")->capture_default_str();
  rat->add_option("--points", qo.points, "sample points for --quartic")->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  rat->add_option("--format", rat_format, "text or json")->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  // sequences ---------------------------------------------------------------
  auto* seq = app.add_subcommand("sequences", "Admissible singularity sequences");
  bool finite = false, unique = false;
  int max_interior = 6, depth = 1, count = 4;
  std::string extend_text, validate_text;
  seq->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]")->required();
  seq->add_flag("--finite", finite, "list finite sequences C ... C (the default action)");
  seq->add_option("--max", max_interior, "largest number of poles for --finite")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  seq->add_option("--depth", depth, "reflections applied in the admissibility test")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  seq->add_flag("--unique", unique, "the finite sequence realised at these parameters");
  seq->add_option("--extend", extend_text, "grow an open sequence such as \"C A1 ...\"");
  seq->add_option("--count", count, "poles to add with --extend")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  seq->add_option("--validate", validate_text, "check one sequence against the tables");

  // reduce ------------------------------------------------------------------
  auto* red = app.add_subcommand("reduce", "Word carrying generic parameters into the positive alcove");
  red->add_option("--alpha", c.alpha, "parameters a1,a2[,a3]; fractions stay exact")->required();

  // The config file targets whichever subcommand appears on the command line.
  std::string sub_name;
  for (int i = 1; i < argc && sub_name.empty(); ++i)
    for (const auto* s : app.get_subcommands({}))
      if (s->get_name() == argv[i]) sub_name = argv[i];
  app.config_formatter(std::make_shared<PlainConfig>(sub_name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*integ) {
      const Params p = parse_params(c.alpha);
      c.integ.pole_cap = c.pole_cap;
      Eigen::Vector3d f0;
      if (!f0_text.empty() == !uv_text.empty())
        throw Error(ErrorKind::PreconditionFailed, "give exactly one of --f0 and --uv");
      if (!f0_text.empty()) {
        const auto v = parse_list(f0_text, 3, "--f0");
        f0 = {v[0], v[1], v[2]};
      } else {
        const auto v = parse_list(uv_text, 2, "--uv");
        f0 = initial_state(x0, v[0], v[1]);
      }
      Trajectory t = integrate(f0, p, x0, x_to, c.integ);
      Output out(c.out);
      if (integ_format == "csv") {
        write_trajectory_csv(out.get(), t);
      } else {
        const bool fwd = x_to > x0;
        const auto end_class = classify_asymptotics(t, fwd ? Side::Right : Side::Left);
        Json j;
        j["params"] = params_json(p);
        j["x_from"] = x0;
        j["x_end"] = t.x_end;
        j["pole_cap_hit"] = t.pole_cap_hit;
        j["end_class"] = to_string(end_class);
        j["events"] = events_json(t.events);
        out.get() << j.dump(2) << '\n';
      }
    } else if (*classify) {
      const Params p = parse_params(c.alpha);
      const auto uv = parse_list(uv_text, 2, "--uv");
      const ScanCell cell = scan_point(p, c.anchor, uv[0], uv[1], c.horizon, c.pole_cap, c.integ);
      if (cell.failed) throw Error(ErrorKind::StepFailure, "integration failed: " + cell.error);
      std::string valid = "untested";
      if (cell.sequence.is_finite() && is_generic(p))
        valid = validate_sequence(cell.sequence, p).valid ? "yes" : "no";
      if (classify_format == "json") {
        Json j;
        j["params"] = params_json(p);
        j["u"] = uv[0];
        j["v"] = uv[1];
        j["n_minus"] = cell.n_minus;
        j["n_plus"] = cell.n_plus;
        j["left_class"] = to_string(cell.left_class);
        j["right_class"] = to_string(cell.right_class);
        j["sequence"] = to_string(cell.sequence);
        j["valid"] = valid;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "n_minus " << cell.n_minus << "\nn_plus " << cell.n_plus << "\nleft "
                  << to_string(cell.left_class) << "\nright " << to_string(cell.right_class)
                  << "\nsequence " << to_string(cell.sequence) << "\nvalid " << valid << '\n';
      }
    } else if (*scan) {
      ScanOptions so;
      so.anchor = c.anchor;
      so.window = parse_window(window_text);
      so.nu = res_u > 0 ? res_u : res;
      so.nv = res_v > 0 ? res_v : res;
      so.horizon = c.horizon;
      so.pole_cap = c.pole_cap;
      so.integrator = c.integ;
      so.threads = c.threads;
      const ScanGrid g = scan_grid(parse_params(c.alpha), so);
      Output out(c.out);
      if (scan_format == "csv") {
        write_scan_csv(out.get(), g);
      } else {
        write_scan_ppm(out.get(), g);
      }
    } else if (*btob) {
      const Params p = parse_params(c.alpha);
      const Window w = parse_window(btob_window);
      BtoBResult r;
      if (!target.empty()) {
        const auto comma = target.find(',');
        if (comma == std::string::npos)
          throw Error(ErrorKind::ParseError, "--target needs two classes such as B2,B3");
        r = find_btob_pair(p, parse_asymptotic_class(target.substr(0, comma)),
                           parse_asymptotic_class(target.substr(comma + 1)), w, seed_res, bo);
      } else {
        bool found = false;
        for (const auto& seed : find_btob_seeds(p, w, seed_res, bo)) {
          try {
            r = find_btob(p, seed, bo);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::BracketLost) throw;
            continue;
          }
          const auto is_b = [](AsymptoticClass k) {
            return k != AsymptoticClass::C && k != AsymptoticClass::Unresolved;
          };
          if (r.check.poles == 0 && is_b(r.check.left) && is_b(r.check.right)) {
            found = true;
            break;
          }
        }
        if (!found) throw Error(ErrorKind::BracketLost, "no seed converged to a B to B orbit");
      }
      const Eigen::Vector3d f0 = initial_state(bo.anchor, r.uv.x(), r.uv.y());
      Json j;
      j["params"] = params_json(p);
      j["anchor"] = bo.anchor;
      j["u"] = r.uv.x();
      j["v"] = r.uv.y();
      j["f0"] = {f0[0], f0[1], f0[2]};
      j["left_class"] = to_string(r.check.left);
      j["right_class"] = to_string(r.check.right);
      j["zero_counts"] = r.check.zero_counts;
      j["sign_changes"] = mask_text(r.check.zero_mask);
      j["iterations"] = r.perimeters.size() - 1;
      j["perimeter"] = r.quad.perimeter();
      j["used_fallback"] = r.used_fallback;
      Output out(c.out);
      out.get() << j.dump(2) << '\n';
    } else if (*cc) {
      co.window = parse_window(cc_window);
      const CcRegion r = trace_cc_region(parse_params(c.alpha), co);
      Output out(c.out);
      if (cc_format == "csv") {
        write_polyline_csv(out.get(), r.boundary);
      } else {
        Json j;
        j["interior"] = {r.interior.x(), r.interior.y()};
        j["area"] = r.area;
        Json b = Json::array();
        for (const auto& q : r.boundary) b.push_back({q.x(), q.y()});
        j["boundary"] = b;
        out.get() << j.dump(2) << '\n';
      }
    } else if (*rat) {
      const GroupWord w = parse_word(word_text.empty() && quartic
                                         ? "s s t s s t s t s s t s s t s"
                                         : (word_text.empty() ? "id" : word_text));
      if (quartic) {
        const auto iv = parse_list(interval_text, 2, "--interval");
        const QuarticReport q = quartic_residual_check(parse_params(rat_alpha), w, iv[0], iv[1], qo);
        if (rat_format == "json") {
          Json j;
          j["transformed"] = params_json(q.transformed);
          j["p4_alpha"] = q.p4_alpha;
          j["p4_beta"] = q.p4_beta;
          j["spiv_residual"] = q.spiv_residual;
          j["quartic_residual"] = q.quartic_residual;
          j["quartic_relative"] = q.quartic_relative;
          j["points"] = q.points;
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "params " << format_params(q.transformed) << "\nP_IV alpha "
                    << format_double(q.p4_alpha) << " beta " << format_double(q.p4_beta)
                    << "\nspiv residual " << format_double(q.spiv_residual)
                    << "\nquartic residual " << format_double(q.quartic_residual)
                    << "\nquartic relative residual " << format_double(q.quartic_relative) << '\n';
        }
      } else {
        const RationalTriple r =
            act_on_rational(w, base == "first" ? fundamental_first() : fundamental_second());
        const bool ok = verify_spiv(r).zero && satisfies_constraint(r);
        std::vector<MvPoly> ids;
        if (identities) ids = extract_identities(w, r);
        std::optional<SingularityProfile> prof;
        if (profile) prof = singularity_profile(r);
        if (rat_format == "json") {
          Json j = rational_triple_json(r);
          j["verified"] = ok;
          if (identities) {
            j["identities"] = Json::array();
            for (const auto& m : ids) j["identities"].push_back(m.to_string());
          }
          if (prof) {
            j["sequence"] = to_string(prof->sequence);
            j["poles"] = Json::array();
            for (const auto& pi : prof->poles)
              j["poles"].push_back({{"x", pi.x}, {"type", "A" + std::to_string(pi.type)}});
          }
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "params " << r.params[0].get_str() << ',' << r.params[1].get_str() << ','
                    << r.params[2].get_str() << '\n';
          for (int i = 0; i < 3; ++i) std::cout << 'f' << i + 1 << " = " << r[i].to_string() << '\n';
          std::cout << "verified " << (ok ? "yes" : "no") << '\n';
          for (const auto& m : ids) std::cout << "identity " << m.to_string() << " = 0\n";
          if (prof) {
            for (const auto& pi : prof->poles)
              std::cout << "pole A" << pi.type << " at " << format_double(pi.x) << '\n';
            std::cout << "sequence " << to_string(prof->sequence) << '\n';
          }
        }
      }
    } else if (*seq) {
      const Params p = parse_params(c.alpha);
      bool acted = false;
      if (!validate_text.empty()) {
        const auto v = validate_sequence(parse_sequence(validate_text), p);
        std::cout << (v.valid ? "valid" : "invalid: " + v.reason) << '\n';
        acted = true;
      }
      if (unique) {
        std::cout << compact(unique_finite_sequence(p)) << '\n';
        acted = true;
      }
      if (!extend_text.empty()) {
        for (const auto& s : extend_open(parse_sequence(extend_text), p, count, depth))
          std::cout << to_string(s) << '\n';
        acted = true;
      }
      if (finite || !acted) {
        for (const auto& s : enumerate_finite(p, max_interior, depth)) std::cout << compact(s) << '\n';
      }
    } else if (*red) {
      const ExactParams p = parse_exact_params(c.alpha);
      const auto r = reduce_to_positive(p);
      std::cout << "word " << format_word(r.word) << "\nimage " << r.image[0].get_str() << ','
                << r.image[1].get_str() << ',' << r.image[2].get_str() << '\n';
    }
  } catch (const Error& e) {
    // Malformed option values are usage errors; everything else is a domain
    // error reported by name.
    std::cerr << e.name() << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
