#include "spiv/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <thread>

#include <unsupported/Eigen/AutoDiff>

namespace spiv {

namespace {

const double kSqrt3 = std::sqrt(3.0);

Symbol class_symbol(AsymptoticClass c) {
  switch (c) {
    case AsymptoticClass::C: return Symbol::C;
    case AsymptoticClass::B1: return Symbol::B1;
    case AsymptoticClass::B2: return Symbol::B2;
    case AsymptoticClass::B3: return Symbol::B3;
    case AsymptoticClass::Unresolved: break;
  }
  return Symbol::Open;
}

bool definite(AsymptoticClass c) { return c != AsymptoticClass::Unresolved; }

// Poles and zeros of the backward and forward runs merged in increasing x.
std::vector<Event> merged_events(const Trajectory& bwd, const Trajectory& fwd) {
  std::vector<Event> out(bwd.events.rbegin(), bwd.events.rend());
  out.insert(out.end(), fwd.events.begin(), fwd.events.end());
  return out;
}

}  // namespace

Eigen::Vector3d initial_state(double anchor, double u, double v) {
  const double half = (anchor - u) / 2;
  const double w = kSqrt3 * v / 2;
  return {u, half + w, half - w};
}

double grid_point(double lo, double hi, int n, int i) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "a grid axis needs at least 2 points");
  return ((n - 1 - i) * lo + i * hi) / (n - 1);
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPIV_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::min(std::max(threads, 1), std::max(n, 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Scans

bool ScanCell::resolved() const {
  if (failed) return false;
  return (left_capped || definite(left_class)) && (right_capped || definite(right_class));
}

ScanCell scan_point(const Params& p, double anchor, double u, double v, double horizon,
                    int pole_cap, const IntegratorOptions& opts) {
  ScanCell c;
  c.u = u;
  c.v = v;
  IntegratorOptions o = opts;
  o.pole_cap = pole_cap;
  o.record_steps = false;
  o.output_points.clear();
  try {
    const Eigen::Vector3d f0 = initial_state(anchor, u, v);
    Trajectory fwd = integrate(f0, p, anchor, anchor + horizon, o);
    Trajectory bwd = integrate(f0, p, anchor, anchor - horizon, o);
    c.n_plus = fwd.pole_count();
    c.n_minus = bwd.pole_count();
    c.right_capped = fwd.pole_cap_hit;
    c.left_capped = bwd.pole_cap_hit;
    c.right_class = classify_asymptotics(fwd, Side::Right);
    c.left_class = classify_asymptotics(bwd, Side::Left);

    SymbolSequence& s = c.sequence;
    s.left = c.left_capped ? Symbol::Open : class_symbol(c.left_class);
    s.right = c.right_capped ? Symbol::Open : class_symbol(c.right_class);
    s.gaps.assign(1, GapMarks{});
    unsigned parity = 0;
    for (const Event& e : merged_events(bwd, fwd)) {
      if (e.kind == EventKind::Pole) {
        s.interior.push_back(pole_symbol(e.index));
        s.gaps.back().zeros = parity;
        s.gaps.push_back({});
        parity = 0;
      } else {
        parity ^= 1u << (e.index - 1);
      }
    }
    s.gaps.back().zeros = parity;
    for (std::size_t g = 0; g < s.gaps.size(); ++g) {
      const bool open_left = g == 0 && s.left == Symbol::Open;
      const bool open_right = g + 1 == s.gaps.size() && s.right == Symbol::Open;
      if (open_left || open_right) {
        s.gaps[g] = {};
      } else {
        s.gaps[g].known = 7;
      }
    }
  } catch (const Error& e) {
    c.failed = true;
    c.error = e.name();
    c.sequence = {};
    c.sequence.left = c.sequence.right = Symbol::Open;
  }
  return c;
}

ScanGrid scan_grid(const Params& p, const ScanOptions& opts) {
  if (opts.nu < 2 || opts.nv < 2)
    throw Error(ErrorKind::PreconditionFailed, "scan resolution must be at least 2 per axis");
  if (opts.pole_cap < 1) throw Error(ErrorKind::PreconditionFailed, "pole cap must be positive");
  if (!(opts.horizon > 0)) throw Error(ErrorKind::PreconditionFailed, "horizon must be positive");
  ScanGrid g;
  g.nu = opts.nu;
  g.nv = opts.nv;
  g.cells.resize(static_cast<std::size_t>(opts.nu) * opts.nv);
  const Window& w = opts.window;
  parallel_for(opts.nu * opts.nv, thread_count(opts.threads), [&](int k) {
    const int i = k % opts.nu, j = k / opts.nu;
    g.cells[k] = scan_point(p, opts.anchor, grid_point(w.u_lo, w.u_hi, opts.nu, i),
                            grid_point(w.v_lo, w.v_hi, opts.nv, j), opts.horizon,
                            opts.pole_cap, opts.integrator);
  });
  return g;
}

// ---------------------------------------------------------------------------
// B to B

std::string to_string(const OutcomePair& o) {
  return to_string(o.left) + "|" + to_string(o.right);
}

double Quadrilateral::perimeter() const {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += (corners[(i + 1) % 4].point - corners[i].point).norm();
  return s;
}

Eigen::Vector2d Quadrilateral::centroid() const {
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& k : corners) c += k.point;
  return c / 4;
}

bool Quadrilateral::is_bracketing() const {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (corners[i].outcome == corners[j].outcome) return false;
  return true;
}

namespace {

Symbol first_outcome(Trajectory& t, Side side) {
  if (t.pole_count() > 0) return pole_symbol(t.poles().front().index);
  return class_symbol(classify_asymptotics(t, side));
}

// Corners ordered by angle about their mean, so the perimeter is that of a
// simple polygon.
Quadrilateral make_quad(std::array<Corner, 4> c) {
  Eigen::Vector2d m = Eigen::Vector2d::Zero();
  for (const auto& k : c) m += k.point;
  m /= 4;
  std::sort(c.begin(), c.end(), [&](const Corner& a, const Corner& b) {
    return std::atan2(a.point.y() - m.y(), a.point.x() - m.x()) <
           std::atan2(b.point.y() - m.y(), b.point.x() - m.x());
  });
  return Quadrilateral{c};
}

// Smallest bracketing quadrilateral drawn from the candidates.
std::optional<Quadrilateral> best_bracket(const std::vector<Corner>& pts) {
  std::optional<Quadrilateral> best;
  double best_p = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (pts[a].outcome == pts[b].outcome) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (pts[c].outcome == pts[a].outcome || pts[c].outcome == pts[b].outcome) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          const auto& od = pts[d].outcome;
          if (od == pts[a].outcome || od == pts[b].outcome || od == pts[c].outcome) continue;
          Quadrilateral q = make_quad({pts[a], pts[b], pts[c], pts[d]});
          const double per = q.perimeter();
          if (per < best_p) {
            best_p = per;
            best = q;
          }
        }
      }
    }
  return best;
}

std::vector<Corner> classify_points(const Params& p, const std::vector<Eigen::Vector2d>& pts,
                                    const BtoBOptions& opts) {
  std::vector<Corner> out(pts.size());
  parallel_for(static_cast<int>(pts.size()), thread_count(opts.threads), [&](int i) {
    out[i] = {pts[i], classify_outcome(p, opts.anchor, pts[i], opts.horizon, opts.integrator)};
  });
  return out;
}

}  // namespace

OutcomePair classify_outcome(const Params& p, double anchor, const Eigen::Vector2d& uv,
                             double horizon, const IntegratorOptions& opts) {
  IntegratorOptions o = opts;
  o.pole_cap = 1;
  o.record_steps = false;
  o.output_points.clear();
  const Eigen::Vector3d f0 = initial_state(anchor, uv.x(), uv.y());
  OutcomePair out;
  try {
    Trajectory bwd = integrate(f0, p, anchor, anchor - horizon, o);
    out.left = first_outcome(bwd, Side::Left);
  } catch (const Error&) {
    out.left = Symbol::Open;
  }
  try {
    Trajectory fwd = integrate(f0, p, anchor, anchor + horizon, o);
    out.right = first_outcome(fwd, Side::Right);
  } catch (const Error&) {
    out.right = Symbol::Open;
  }
  return out;
}

BtoBCheck check_btob(const Params& p, double anchor, const Eigen::Vector2d& uv,
                     double check_horizon, const IntegratorOptions& opts) {
  IntegratorOptions o = opts;
  o.record_steps = false;
  o.output_points.clear();
  const Eigen::Vector3d f0 = initial_state(anchor, uv.x(), uv.y());
  Trajectory fwd = integrate(f0, p, anchor, anchor + check_horizon, o);
  Trajectory bwd = integrate(f0, p, anchor, anchor - check_horizon, o);
  BtoBCheck c;
  c.poles = fwd.pole_count() + bwd.pole_count();
  for (const Event& e : merged_events(bwd, fwd)) {
    if (e.kind != EventKind::Zero) continue;
    ++c.zero_counts[e.index - 1];
    c.zero_mask ^= 1u << (e.index - 1);
  }
  // Classification at the end points only: extending past the check horizon
  // would follow the instability away from the B manifold.
  if (fwd.pole_count() == 0) c.right = classify_state(fwd.x_end, fwd.end_sample().f);
  if (bwd.pole_count() == 0) c.left = classify_state(bwd.x_end, bwd.end_sample().f);
  return c;
}

BtoBResult find_btob(const Params& p, const Quadrilateral& seed, const BtoBOptions& opts) {
  if (!seed.is_bracketing())
    throw Error(ErrorKind::PreconditionFailed, "seed corners must realise four distinct outcomes");
  BtoBResult r;
  r.quad = make_quad(seed.corners);
  r.perimeters.push_back(r.quad.perimeter());
  for (int it = 0; r.quad.perimeter() >= opts.tol; ++it) {
    if (it >= opts.max_iterations) throw Error(ErrorKind::BracketLost, "iteration limit reached");
    const double current = r.quad.perimeter();
    const auto& c = r.quad.corners;
    std::vector<Eigen::Vector2d> fresh;
    for (int i = 0; i < 4; ++i) fresh.push_back((c[i].point + c[(i + 1) % 4].point) / 2);
    fresh.push_back(r.quad.centroid());
    std::vector<Corner> pts(c.begin(), c.end());
    for (const auto& k : classify_points(p, fresh, opts)) pts.push_back(k);
    auto next = best_bracket(pts);
    if (!next || next->perimeter() > current / 1.5) {
      // Re-bracket on a 5x5 grid over the bounding box.
      Eigen::Vector2d lo = c[0].point, hi = c[0].point;
      for (const auto& k : c) {
        lo = lo.cwiseMin(k.point);
        hi = hi.cwiseMax(k.point);
      }
      std::vector<Eigen::Vector2d> grid;
      for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i)
          grid.emplace_back(grid_point(lo.x(), hi.x(), 5, i), grid_point(lo.y(), hi.y(), 5, j));
      pts.assign(c.begin(), c.end());
      for (const auto& k : classify_points(p, grid, opts)) pts.push_back(k);
      next = best_bracket(pts);
      if (!next || next->perimeter() > current / 1.5)
        throw Error(ErrorKind::BracketLost, "no sub-quadrilateral keeps four distinct outcomes");
      r.used_fallback = true;
    }
    r.quad = *next;
    r.perimeters.push_back(r.quad.perimeter());
  }
  r.uv = r.quad.centroid();
  r.check = check_btob(p, opts.anchor, r.uv, opts.check_horizon, opts.integrator);
  return r;
}

std::vector<Quadrilateral> find_btob_seeds(const Params& p, const Window& window, int res,
                                           const BtoBOptions& opts) {
  std::vector<Eigen::Vector2d> pts;
  for (int j = 0; j < res; ++j)
    for (int i = 0; i < res; ++i)
      pts.emplace_back(grid_point(window.u_lo, window.u_hi, res, i),
                       grid_point(window.v_lo, window.v_hi, res, j));
  const auto cls = classify_points(p, pts, opts);
  // Windows of (s+1) x (s+1) grid points, smallest first. A window qualifies
  // when its outcomes contain two left times two right outcomes, i.e. it
  // straddles a crossing of one left and one right basin boundary; the corner
  // for each outcome is its point nearest the window centre. Larger windows
  // catch crossings where the boundaries meet at a shallow angle.
  std::vector<Quadrilateral> seeds;
  for (int s = 1; s <= 3 && seeds.empty(); ++s)
    for (int j = 0; j + s < res; ++j)
      for (int i = 0; i + s < res; ++i) {
        const Eigen::Vector2d centre = (cls[j * res + i].point + cls[(j + s) * res + i + s].point) / 2;
        std::map<OutcomePair, Corner> nearest;
        std::set<Symbol> left, right;
        for (int b = j; b <= j + s; ++b)
          for (int a = i; a <= i + s; ++a) {
            const Corner& c = cls[b * res + a];
            left.insert(c.outcome.left);
            right.insert(c.outcome.right);
            auto it = nearest.find(c.outcome);
            if (it == nearest.end() ||
                (c.point - centre).norm() < (it->second.point - centre).norm())
              nearest[c.outcome] = c;
          }
        if (left.size() != 2 || right.size() != 2 || nearest.size() != 4) continue;
        if (left.contains(Symbol::Open) || right.contains(Symbol::Open)) continue;
        std::array<Corner, 4> corners;
        int k = 0;
        for (const auto& [o, c] : nearest) corners[k++] = c;
        seeds.push_back(make_quad(corners));
      }
  return seeds;
}

BtoBResult find_btob_pair(const Params& p, AsymptoticClass left, AsymptoticClass right,
                          const Window& window, int res, const BtoBOptions& opts) {
  for (const auto& seed : find_btob_seeds(p, window, res, opts)) {
    try {
      BtoBResult r = find_btob(p, seed, opts);
      if (r.check.left == left && r.check.right == right && r.check.poles == 0) return r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BracketLost) throw;
    }
  }
  throw Error(ErrorKind::BracketLost,
              "no seed converged to a " + to_string(left) + " to " + to_string(right) + " orbit");
}

// ---------------------------------------------------------------------------
// C to C region

bool is_cc(const Params& p, double anchor, const Eigen::Vector2d& uv, double horizon,
           const IntegratorOptions& opts) {
  IntegratorOptions o = opts;
  o.pole_cap = 1;
  o.record_steps = false;
  o.output_points.clear();
  try {
    const Eigen::Vector3d f0 = initial_state(anchor, uv.x(), uv.y());
    Trajectory fwd = integrate(f0, p, anchor, anchor + horizon, o);
    if (fwd.pole_count() > 0 || classify_asymptotics(fwd, Side::Right) != AsymptoticClass::C)
      return false;
    Trajectory bwd = integrate(f0, p, anchor, anchor - horizon, o);
    return bwd.pole_count() == 0 && classify_asymptotics(bwd, Side::Left) == AsymptoticClass::C;
  } catch (const Error&) {
    return false;
  }
}

double polygon_area(const std::vector<Eigen::Vector2d>& pts) {
  double s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return std::abs(s) / 2;
}

CcRegion trace_cc_region(const Params& p, const CcRegionOptions& opts) {
  if (opts.rays < 3) throw Error(ErrorKind::PreconditionFailed, "at least 3 rays are needed");
  if (!(opts.tol > 0)) throw Error(ErrorKind::PreconditionFailed, "tolerance must be positive");
  const int n = opts.scan_res;
  const Window& w = opts.window;
  std::vector<char> cc(static_cast<std::size_t>(n) * n);
  std::vector<Eigen::Vector2d> pts(cc.size());
  const int threads = thread_count(opts.threads);
  parallel_for(n * n, threads, [&](int k) {
    pts[k] = {grid_point(w.u_lo, w.u_hi, n, k % n), grid_point(w.v_lo, w.v_hi, n, k / n)};
    cc[k] = is_cc(p, opts.anchor, pts[k], opts.horizon, opts.integrator);
  });
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  int count = 0;
  for (std::size_t k = 0; k < cc.size(); ++k)
    if (cc[k]) {
      mean += pts[k];
      ++count;
    }
  if (count == 0) throw Error(ErrorKind::NoInteriorPoint, "the scan found no C to C cell");
  mean /= count;

  CcRegion region;
  if (is_cc(p, opts.anchor, mean, opts.horizon, opts.integrator)) {
    region.interior = mean;
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cc.size(); ++k)
      if (cc[k] && (pts[k] - mean).norm() < best) {
        best = (pts[k] - mean).norm();
        region.interior = pts[k];
      }
  }

  const int m = opts.rays;
  region.inside.resize(m);
  region.outside.resize(m);
  std::vector<char> unbounded(m, 0);
  parallel_for(m, threads, [&](int k) {
    const double th = 2 * std::numbers::pi * k / m;
    const Eigen::Vector2d dir(std::cos(th), std::sin(th));
    auto inside = [&](double r) {
      return is_cc(p, opts.anchor, region.interior + r * dir, opts.horizon, opts.integrator);
    };
    double lo = 0, hi = opts.march_step;
    while (inside(hi)) {
      lo = hi;
      hi += opts.march_step;
      if (hi > opts.max_radius) {
        unbounded[k] = 1;
        return;
      }
    }
    while (hi - lo > opts.tol) {
      const double mid = (lo + hi) / 2;
      (inside(mid) ? lo : hi) = mid;
    }
    region.inside[k] = region.interior + lo * dir;
    region.outside[k] = region.interior + hi * dir;
  });
  if (std::find(unbounded.begin(), unbounded.end(), 1) != unbounded.end())
    throw Error(ErrorKind::PreconditionFailed, "a ray left the C to C region's search radius");
  for (int k = 0; k < m; ++k) region.boundary.push_back((region.inside[k] + region.outside[k]) / 2);
  region.area = polygon_area(region.boundary);
  return region;
}

// ---------------------------------------------------------------------------
// Quartic

double quartic_relation(double w, double dw, double z, double alpha) {
  const double s = z * z - alpha;
  const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
  const double d2 = dw * dw;
  return d2 * d2 + 8 * d2 * dw + (-2 * w4 - 8 * z * w3 - 8 * s * w2) * d2 +
         (-8 * w4 - 32 * z * w3 - 32 * s * w2 - 128) * dw + w4 * w4 + 8 * z * w4 * w3 +
         8 * (3 * z * z - alpha) * w3 * w3 + 32 * z * s * w4 * w + 16 * (s * s + 1) * w4 +
         64 * z * w3 - 256;
}

namespace {

// Sum of the absolute values of the terms of quartic_relation, the scale
// against which its residual is judged.
double quartic_scale(double w, double dw, double z, double alpha) {
  const double s = z * z - alpha;
  const double aw = std::abs(w), ad = std::abs(dw), az = std::abs(z);
  const double w2 = aw * aw, w3 = w2 * aw, w4 = w3 * aw;
  const double d2 = ad * ad;
  return d2 * d2 + 8 * d2 * ad + (2 * w4 + 8 * az * w3 + 8 * std::abs(s) * w2) * d2 +
         (8 * w4 + 32 * az * w3 + 32 * std::abs(s) * w2 + 128) * ad + w4 * w4 +
         8 * az * w4 * w3 + 8 * std::abs(3 * z * z - alpha) * w3 * w3 +
         32 * az * std::abs(s) * w4 * aw + 16 * (s * s + 1) * w4 + 64 * az * w3 + 256;
}

}  // namespace

QuarticReport quartic_residual_check(const Params& p0, const GroupWord& w, double x_lo,
                                     double x_hi, const QuarticOptions& opts) {
  if (!is_zero_value(p0[0]))
    throw Error(ErrorKind::PreconditionFailed, "the Riccati reduction needs alpha1 = 0");
  if (!(x_lo < x_hi) || opts.points < 2)
    throw Error(ErrorKind::PreconditionFailed, "need x_lo < x_hi and at least two points");
  QuarticReport rep;
  rep.transformed = act_on_alpha(w, p0);
  if (std::abs(rep.transformed[0] - 2) > 1e-12)
    throw Error(ErrorKind::PreconditionFailed, "the word does not send alpha1 to 2");
  const auto p4 = p4_parameters(rep.transformed, 1);
  rep.p4_alpha = p4.alpha;
  rep.p4_beta = p4.beta;

  std::vector<double> xs;
  for (int i = 0; i < opts.points; ++i) xs.push_back(grid_point(x_lo, x_hi, opts.points, i));
  const Eigen::Vector3d f0(0, opts.f2, opts.x0 - opts.f2);
  IntegratorOptions io;
  io.record_steps = false;
  io.pole_cap = 1;

  // States at the sample points, collected from runs on either side of x0.
  std::vector<Sample> samples;
  auto run = [&](double x_to, const std::vector<double>& at) {
    if (at.empty()) return;
    io.output_points = at;
    Trajectory t = integrate(f0, p0, opts.x0, x_to, io);
    if (t.pole_count() > 0)
      throw Error(ErrorKind::PreconditionFailed, "the Riccati solution has a pole in the interval");
    std::set<double> pending(at.begin(), at.end());
    for (const auto& s : t.samples)
      if (pending.erase(s.x)) samples.push_back(s);
  };
  std::vector<double> left, right;
  for (double x : xs) {
    if (x < opts.x0) left.push_back(x);
    else if (x > opts.x0) right.push_back(x);
    else samples.push_back({x, Chart::F, f0, f0});
  }
  run(std::min(x_lo, opts.x0 - 1e-3), left);
  run(std::max(x_hi, opts.x0 + 1e-3), right);
  if (samples.size() != xs.size())
    throw Error(ErrorKind::PreconditionFailed, "dense output missed a sample point");

  using AD = Eigen::AutoDiffScalar<Eigen::Matrix<double, 1, 1>>;
  const double pivot_tol = 1e-8;
  for (const Sample& s : samples) {
    const Eigen::Vector3d df = rhs_f<double>(s.f, p0);
    std::array<AD, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = AD(s.f[i], Eigen::Matrix<double, 1, 1>(df[i]));
    auto check = [&](const AD& pivot) {
      if (std::abs(pivot.value()) <= pivot_tol)
        throw Error(ErrorKind::IntermediatePole,
                    "the transform meets f1 = 0 at x = " + format_double(s.x));
    };
    const auto g = act_on_triple(w, f, p0, check).first;

    Eigen::Vector3d gv, gd;
    for (int i = 0; i < 3; ++i) {
      gv[i] = g[i].value();
      gd[i] = g[i].derivatives()[0];
    }
    const Eigen::Vector3d rhs = rhs_f<double>(gv, rep.transformed);
    rep.spiv_residual = std::max(rep.spiv_residual, (gd - rhs).cwiseAbs().maxCoeff());

    const double wv = -std::sqrt(2.0) * gv[0];
    const double dw = -2 * gd[0];
    const double z = s.x / std::sqrt(2.0);
    const double q = std::abs(quartic_relation(wv, dw, z, rep.p4_alpha));
    rep.quartic_residual = std::max(rep.quartic_residual, q);
    rep.quartic_relative =
        std::max(rep.quartic_relative, q / quartic_scale(wv, dw, z, rep.p4_alpha));
  }
  rep.points = static_cast<int>(samples.size());
  return rep;
}

}  // namespace spiv
