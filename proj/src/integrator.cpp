#include "spiv/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace spiv {

std::string to_string(Chart c) {
  switch (c) {
    case Chart::F: return "F";
    case Chart::A1: return "A1";
    case Chart::A2: return "A2";
    case Chart::A3: return "A3";
  }
  return "?";
}

std::string to_string(AsymptoticClass c) {
  switch (c) {
    case AsymptoticClass::C: return "C";
    case AsymptoticClass::B1: return "B1";
    case AsymptoticClass::B2: return "B2";
    case AsymptoticClass::B3: return "B3";
    case AsymptoticClass::Unresolved: return "Unresolved";
  }
  return "?";
}

AsymptoticClass parse_asymptotic_class(const std::string& text) {
  for (auto c : {AsymptoticClass::C, AsymptoticClass::B1, AsymptoticClass::B2,
                 AsymptoticClass::B3, AsymptoticClass::Unresolved})
    if (to_string(c) == text) return c;
  throw Error(ErrorKind::ParseError, "unknown asymptotic class '" + text + "'");
}

int Trajectory::pole_count() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(), [](const Event& e) {
    return e.kind == EventKind::Pole;
  }));
}

std::vector<Event> Trajectory::poles() const {
  std::vector<Event> out;
  for (const auto& e : events)
    if (e.kind == EventKind::Pole) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Charts. For pole type k the vanishing component has index j = k-1, the
// component with residue +1 is a = k mod 3 and the one with residue -1 is
// b = (k+1) mod 3 (all 0-based).

namespace {

struct Roles {
  int j, a, b;
};

Roles roles(int k) {
  if (k < 1 || k > 3) throw Error(ErrorKind::PreconditionFailed, "chart index must be 1..3");
  const int j = k - 1;
  return {j, (j + 1) % 3, (j + 2) % 3};
}

}  // namespace

Eigen::Vector3d rhs_chart(int k, const Eigen::Vector3d& z, const Params& p) {
  const Roles r = roles(k);
  const double A = p[r.a];
  const double C = p[r.j];
  const double z1 = z[0], z2 = z[1], z3 = z[2];
  Eigen::Vector3d d;
  d[0] = 1.0 + z1 * (z1 * z1 * z3 - z1 * (A + C) - z2);
  d[1] = (1.0 + C) - C * z1 * z2 - 2.0 * z1 * z3 + z1 * z1 * z2 * z3;
  d[2] = z2 * z3 - C * (A + C) + z1 * z3 * (2.0 * A + 3.0 * C - 2.0 * z1 * z3);
  return d;
}

Eigen::Vector3d rhs_chart_variant_a3(const Eigen::Vector3d& z, const Params& p) {
  const double a1 = p[0], a3 = p[2];
  const double z1 = z[0], z2 = z[1], z3 = z[2];
  Eigen::Vector3d d;
  d[0] = 1.0 + z1 * (z1 * z1 * z3 - z1 * (a1 + a3) - z2);
  d[1] = 1.0 + a3 + z1 * (z1 * z2 * z3 - (2.0 + a3) * z3);
  d[2] = z2 * z3 - a3 * (a1 + a3) + z1 * z3 * (2.0 * a1 + 3.0 * a3 - 2.0 * z1 * z3);
  return d;
}

Eigen::Vector3d to_chart(int k, const Eigen::Vector3d& f, const Params& p) {
  const Roles r = roles(k);
  if (f[r.a] == 0.0)
    throw Error(ErrorKind::ChartSingular,
                "f" + std::to_string(r.a + 1) + " vanishes; chart A" + std::to_string(k) +
                    " undefined");
  const double fa = f[r.a];
  return {1.0 / fa, fa + f[r.b], p[r.j] * fa + fa * fa * f[r.j]};
}

Eigen::Vector3d from_chart(int k, const Eigen::Vector3d& z, const Params& p) {
  const Roles r = roles(k);
  Eigen::Vector3d f;
  f[r.a] = 1.0 / z[0];
  f[r.b] = -1.0 / z[0] + z[1];
  f[r.j] = -p[r.j] * z[0] + z[2] * z[0] * z[0];
  return f;
}

ChartState chart_transform(const Eigen::Vector3d& f, Chart target, const Params& p) {
  if (target == Chart::F) return {Chart::F, f};
  return {target, to_chart(chart_index(target), f, p)};
}

Eigen::Vector3d chart_to_f(const ChartState& c, const Params& p) {
  if (c.kind == Chart::F) return c.coords;
  return from_chart(chart_index(c.kind), c.coords, p);
}

Chart select_chart(const Eigen::Vector3d& f, double threshold) {
  for (int k = 1; k <= 3; ++k) {
    const Roles r = roles(k);
    const double fa = f[r.a], fb = f[r.b], fj = std::abs(f[r.j]);
    if (std::abs(fa) > threshold && std::abs(fb) > threshold && fa * fb < 0 &&
        fj <= std::abs(fa) && fj <= std::abs(fb))
      return chart_for_pole(k);
  }
  return Chart::F;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with the Hairer dense output of order 4.

namespace {

namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;
}  // namespace dp

using Vec = Eigen::Vector3d;

struct Dense {
  Vec r1, r2, r3, r4, r5;
  double x0 = 0, h = 0;

  Vec at_theta(double th) const {
    const double th1 = 1.0 - th;
    return r1 + th * (r2 + th1 * (r3 + th * (r4 + th1 * r5)));
  }
};

bool finite(const Vec& v) { return v.allFinite(); }

int sign_nz(double v) { return (v > 0) - (v < 0); }

class Engine {
 public:
  Engine(Trajectory& t, Chart chart, const Vec& y, double x)
      : t_(t), p_(t.params), o_(t.options), chart_(chart), y_(y), x_(x) {
    poles_ = t_.pole_count();
    reset_signs();
  }

  void run(double x_target);

 private:
  Vec rhs(const Vec& y) const {
    if (chart_ == Chart::F) return rhs_f<double>(y, p_);
    return rhs_chart(chart_index(chart_), y, p_);
  }
  Vec to_f(const Vec& y) const { return chart_to_f({chart_, y}, p_); }

  // Functions whose sign changes mark regular zeros of f (0-based component
  // slots; NaN means the component cannot vanish in this chart), and the sign
  // factor relating each function to the component itself.
  std::array<double, 3> zero_functions(const Vec& y) const;
  std::array<int, 3> zero_factor(const Vec& y) const;

  void reset_signs() {
    const auto g = zero_functions(y_);
    for (int i = 0; i < 3; ++i) last_sign_[i] = std::isnan(g[i]) ? 0 : sign_nz(g[i]);
  }

  double bisect(const Dense& d, int slot, bool pole, double th_lo, double th_hi) const;
  void process_events(const Dense& d, const Vec& y_new, bool& capped, double& x_stop);
  void record(double x, const Vec& y) {
    t_.samples.push_back({x, chart_, y, to_f(y)});
  }
  void update_chart();

  Trajectory& t_;
  const Params& p_;
  const IntegratorOptions& o_;
  Chart chart_;
  Vec y_;
  double x_;
  Vec k1_;
  double h_ = 0;
  double err_old_ = 1e-4;
  int poles_ = 0;
  long steps_ = 0;
  std::array<int, 3> last_sign_{};
};

std::array<double, 3> Engine::zero_functions(const Vec& y) const {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (chart_ == Chart::F) return {y[0], y[1], y[2]};
  const Roles r = roles(chart_index(chart_));
  std::array<double, 3> g{nan, nan, nan};
  g[r.j] = -p_[r.j] + y[0] * y[2];  // f_k = z1 * g
  g[r.b] = y[0] * y[1] - 1.0;       // f_{k+2} = g / z1
  return g;
}

std::array<int, 3> Engine::zero_factor(const Vec& y) const {
  if (chart_ == Chart::F) return {1, 1, 1};
  const int s = sign_nz(y[0]);
  return {s, s, s};
}

double Engine::bisect(const Dense& d, int slot, bool pole, double lo, double hi) const {
  auto value = [&](double th) {
    const Vec y = d.at_theta(th);
    return pole ? y[0] : zero_functions(y)[slot];
  };
  const int s_lo = sign_nz(value(lo));
  const double width = o_.tol_event / std::max(std::abs(d.h), 1e-300);
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_nz(value(mid));
    if (s == 0) return mid;
    if (s == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void Engine::process_events(const Dense& d, const Vec& y_new, bool& capped,
                            double& x_stop) {
  struct Found {
    double th;
    Event e;
  };
  std::vector<Found> found;
  const int dir = d.h > 0 ? 1 : -1;

  // Regular zeros.
  const auto g0 = zero_functions(d.r1);
  const auto g1 = zero_functions(y_new);
  for (int i = 0; i < 3; ++i) {
    if (std::isnan(g1[i])) continue;
    const int s_new = sign_nz(g1[i]);
    if (s_new == 0) continue;
    if (last_sign_[i] != 0 && s_new != last_sign_[i]) {
      const int s_old = sign_nz(g0[i]);
      const double th = s_old != 0 ? bisect(d, i, false, 0.0, 1.0) : 0.0;
      const Vec y = d.at_theta(th);
      const int factor = zero_factor(y)[i];
      // Direction of the crossing for increasing x.
      const int g_dir = dir > 0 ? s_new : -s_new;
      found.push_back({th, {EventKind::Zero, i + 1, d.x0 + th * d.h, g_dir * factor}});
    }
    last_sign_[i] = s_new;
  }

  // Poles.
  if (chart_ != Chart::F) {
    const int s0 = sign_nz(d.r1[0]);
    const int s1 = sign_nz(y_new[0]);
    if (s0 != 0 && s1 != 0 && s0 != s1) {
      const double th = bisect(d, 0, true, 0.0, 1.0);
      found.push_back({th, {EventKind::Pole, chart_index(chart_), d.x0 + th * d.h, 1}});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Found& a, const Found& b) { return a.th < b.th; });
  for (const auto& f : found) {
    if (capped) break;
    t_.events.push_back(f.e);
    if (f.e.kind == EventKind::Pole && ++poles_ >= o_.pole_cap) {
      capped = true;
      x_stop = f.e.x;
    }
  }
}

void Engine::update_chart() {
  const Vec f = to_f(y_);
  const Chart wanted = select_chart(f, o_.switch_threshold);
  Chart next = chart_;
  if (chart_ == Chart::F) {
    next = wanted;
  } else if (wanted != Chart::F) {
    next = wanted;
  } else {
    const Roles r = roles(chart_index(chart_));
    const bool small = std::abs(f[r.a]) < o_.exit_threshold && std::abs(f[r.b]) < o_.exit_threshold;
    if (small || std::abs(f[r.a]) < 1.0) next = Chart::F;
  }
  if (next == chart_) return;
  if (!finite(f)) return;
  Vec y_next = next == Chart::F ? f : to_chart(chart_index(next), f, p_);
  if (!finite(y_next)) return;
  chart_ = next;
  y_ = y_next;
  k1_ = rhs(y_);
  reset_signs();
}

void Engine::run(double x_target) {
  const int dir = x_target > x_ ? 1 : -1;
  const double span = std::abs(x_target - x_);
  if (span == 0.0) return;

  std::vector<double> outs;
  for (double xo : o_.output_points)
    if (dir * (xo - x_) > 0 && dir * (xo - x_target) <= 0) outs.push_back(xo);
  std::sort(outs.begin(), outs.end(), [dir](double a, double b) { return dir * a < dir * b; });
  std::size_t next_out = 0;

  update_chart();
  k1_ = rhs(y_);
  if (!finite(k1_)) throw Error(ErrorKind::NonFiniteState, "non-finite derivative at start");
  if (h_ == 0.0) h_ = std::min(o_.initial_step, span);

  const double beta = 0.04;
  const double expo = 0.2 - 0.75 * beta;
  bool reject = false;
  while (dir * (x_target - x_) > 0) {
    if (++steps_ > o_.max_steps)
      throw Error(ErrorKind::StepFailure, "step budget exhausted at x = " + format_double(x_));
    double h = dir * std::min(std::abs(h_), o_.max_step);
    bool last = false;
    if (dir * (x_ + h - x_target) >= 0) {
      h = x_target - x_;
      last = true;
    }

    const Vec& y = y_;
    const Vec k1 = k1_;
    const Vec k2 = rhs(y + h * (dp::a21 * k1));
    const Vec k3 = rhs(y + h * (dp::a31 * k1 + dp::a32 * k2));
    const Vec k4 = rhs(y + h * (dp::a41 * k1 + dp::a42 * k2 + dp::a43 * k3));
    const Vec k5 = rhs(y + h * (dp::a51 * k1 + dp::a52 * k2 + dp::a53 * k3 + dp::a54 * k4));
    const Vec k6 = rhs(y + h * (dp::a61 * k1 + dp::a62 * k2 + dp::a63 * k3 + dp::a64 * k4 +
                                dp::a65 * k5));
    const Vec y1 = y + h * (dp::a71 * k1 + dp::a73 * k3 + dp::a74 * k4 + dp::a75 * k5 +
                            dp::a76 * k6);
    const Vec k7 = rhs(y1);
    const Vec delta = h * (dp::e1 * k1 + dp::e3 * k3 + dp::e4 * k4 + dp::e5 * k5 +
                           dp::e6 * k6 + dp::e7 * k7);

    double err = 0;
    for (int i = 0; i < 3; ++i) {
      const double sc = o_.atol + o_.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
      const double q = delta[i] / sc;
      err += q * q;
    }
    err = std::sqrt(err / 3.0);

    if (!finite(y1) || !finite(k7) || !std::isfinite(err)) {
      h_ = 0.25 * h;
      reject = true;
      if (std::abs(h_) < o_.min_step * std::max(1.0, std::abs(x_)))
        throw Error(ErrorKind::NonFiniteState,
                    "state left the representable range at x = " + format_double(x_));
      continue;
    }
    if (err > 1.0) {
      const double fac = std::max(0.2, 0.9 * std::pow(err, -expo));
      h_ = h * fac;
      reject = true;
      if (std::abs(h_) < o_.min_step * std::max(1.0, std::abs(x_)))
        throw Error(ErrorKind::StepFailure, "step size underflow at x = " + format_double(x_));
      continue;
    }

    Dense d;
    d.x0 = x_;
    d.h = h;
    d.r1 = y;
    const Vec ydiff = y1 - y;
    const Vec bspl = h * k1 - ydiff;
    d.r2 = ydiff;
    d.r3 = bspl;
    d.r4 = ydiff - h * k7 - bspl;
    d.r5 = h * (dp::d1 * k1 + dp::d3 * k3 + dp::d4 * k4 + dp::d5 * k5 + dp::d6 * k6 +
                dp::d7 * k7);

    bool capped = false;
    double x_stop = 0;
    process_events(d, y1, capped, x_stop);

    const double x_new = last ? x_target : x_ + h;
    while (next_out < outs.size() && dir * (outs[next_out] - x_new) <= 0) {
      const double th = (outs[next_out] - x_) / h;
      record(outs[next_out], d.at_theta(th));
      ++next_out;
    }

    x_ = x_new;
    y_ = y1;
    k1_ = k7;

    double fac = std::pow(err, expo) / std::pow(err_old_, beta);
    fac = std::clamp(fac / 0.9, 0.2, 5.0);
    double h_new = h / fac;
    if (reject) h_new = dir * std::min(std::abs(h_new), std::abs(h));
    err_old_ = std::max(err, 1e-4);
    reject = false;
    h_ = h_new;

    if (capped) {
      t_.pole_cap_hit = true;
      (void)x_stop;
      break;
    }
    if (o_.record_steps && !last) record(x_, y_);
    update_chart();
  }
  t_.x_end = x_;
  const Vec f = to_f(y_);
  t_.samples.push_back({x_, chart_, y_, f});
}

void check_start(const Eigen::Vector3d& f0, double x_from) {
  if (!finite(f0))
    throw Error(ErrorKind::NonFiniteState, "initial state is not finite");
  const double sum = f0[0] + f0[1] + f0[2];
  if (std::abs(sum - x_from) > 1e-8 * (1.0 + std::abs(x_from)))
    throw Error(ErrorKind::ConstraintViolation,
                "initial state violates f1+f2+f3 = x (sum " + format_double(sum) +
                    ", x " + format_double(x_from) + ")");
}

}  // namespace

Trajectory integrate(const Eigen::Vector3d& f0, const Params& p, double x_from,
                     double x_to, const IntegratorOptions& opts) {
  if (x_from == x_to) throw Error(ErrorKind::PreconditionFailed, "x_from equals x_to");
  check_start(f0, x_from);
  Trajectory t;
  t.params = p;
  t.options = opts;
  t.x_from = x_from;
  t.x_to = x_to;
  t.x_end = x_from;
  t.samples.push_back({x_from, Chart::F, f0, f0});
  Engine e(t, Chart::F, f0, x_from);
  e.run(x_to);
  return t;
}

void extend(Trajectory& t, double x_to) {
  if (t.pole_cap_hit) return;
  const int dir = t.x_end > t.x_from ? 1 : -1;
  if (dir * (x_to - t.x_end) <= 0) return;
  const Sample s = t.end_sample();
  t.samples.pop_back();
  t.x_to = x_to;
  Engine e(t, s.chart, s.coords, s.x);
  e.run(x_to);
}

// ---------------------------------------------------------------------------

AsymptoticClass classify_state(double x, const Eigen::Vector3d& f) {
  if (x == 0.0 || !f.allFinite()) return AsymptoticClass::Unresolved;
  const Eigen::Vector3d r = f / x;
  if ((r.array() - 1.0 / 3.0).abs().maxCoeff() < 0.1) return AsymptoticClass::C;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(r[k] - 1.0) < 0.1 && std::abs(f[(k + 1) % 3]) < 1.0 &&
        std::abs(f[(k + 2) % 3]) < 1.0)
      return static_cast<AsymptoticClass>(k + 1);
  }
  return AsymptoticClass::Unresolved;
}

AsymptoticClass classify_asymptotics(Trajectory& t, Side side) {
  const bool forward = t.x_end > t.x_from;
  const bool at_end = (side == Side::Right) == forward;
  AsymptoticClass c;
  if (!at_end) {
    const Sample& s = t.samples.front();
    c = classify_state(s.x, s.f);
  } else if (t.pole_cap_hit) {
    c = AsymptoticClass::Unresolved;
  } else {
    c = classify_state(t.x_end, t.end_sample().f);
    if (c == AsymptoticClass::Unresolved && t.x_end != 0.0) {
      extend(t, 3.0 * t.x_end);
      c = t.pole_cap_hit ? AsymptoticClass::Unresolved
                         : classify_state(t.x_end, t.end_sample().f);
    }
  }
  (side == Side::Left ? t.left_class : t.right_class) = c;
  return c;
}

bool zero_events_separated_by_poles(const Trajectory& t) {
  std::array<int, 3> count{};
  for (const auto& e : t.events) {
    if (e.kind == EventKind::Pole) {
      count = {};
    } else if (++count[e.index - 1] > 1) {
      return false;
    }
  }
  return true;
}

}  // namespace spiv
