#pragma once

// Numerical experiments over initial conditions at a fixed anchor abscissa:
// grid scans of pole counts and asymptotics, the search for B to B connecting
// orbits, the boundary of the C to C region and the check of the quartic
// first-order equation for the alpha1 = 2 special solutions.
//
// Initial conditions are parametrised on the plane f1 + f2 + f3 = anchor by
// u = f1 and v = (f2 - f3) / sqrt(3).

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spiv/core.hpp"
#include "spiv/integrator.hpp"
#include "spiv/sequences.hpp"
#include "spiv/symmetry.hpp"

namespace spiv {

struct Window {
  double u_lo = -3, u_hi = 3, v_lo = -3, v_hi = 3;
};

Eigen::Vector3d initial_state(double anchor, double u, double v);

/// i-th of n equispaced points on [lo, hi]; symmetric windows give exactly
/// mirrored points for i and n-1-i.
double grid_point(double lo, double hi, int n, int i);

/// Worker count: `requested` if positive, else SPIV_THREADS, else the
/// hardware concurrency.
int thread_count(int requested = 0);

/// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

// ---------------------------------------------------------------------------
// Scans

struct ScanCell {
  double u = 0, v = 0;
  int n_minus = 0, n_plus = 0;  // pole_cap means "infinite"
  AsymptoticClass left_class = AsymptoticClass::Unresolved;
  AsymptoticClass right_class = AsymptoticClass::Unresolved;
  bool left_capped = false, right_capped = false;
  SymbolSequence sequence;
  bool failed = false;
  std::string error;

  /// Each side either reached the pole cap or has a C/B class.
  bool resolved() const;
  bool pole_free() const { return !failed && n_minus == 0 && n_plus == 0; }
};

struct ScanOptions {
  double anchor = 0;
  Window window;
  int nu = 201, nv = 201;
  double horizon = 10;
  int pole_cap = 10;
  IntegratorOptions integrator;
  int threads = 0;
};

struct ScanGrid {
  int nu = 0, nv = 0;
  std::vector<ScanCell> cells;  // row-major with v outer, u inner
  const ScanCell& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nu + i]; }
};

/// Integrates both ways from one initial condition. Integrator errors are
/// recorded in the cell rather than thrown.
ScanCell scan_point(const Params& p, double anchor, double u, double v, double horizon,
                    int pole_cap, const IntegratorOptions& opts = {});

ScanGrid scan_grid(const Params& p, const ScanOptions& opts);

// ---------------------------------------------------------------------------
// B to B connecting orbits

/// What a solution does first on each side: the type of its first pole
/// (A_k) or, without poles up to the horizon, its asymptotic class (C, B_k,
/// or Open when unresolved).
struct OutcomePair {
  Symbol left = Symbol::Open;
  Symbol right = Symbol::Open;
  friend bool operator==(const OutcomePair&, const OutcomePair&) = default;
  friend auto operator<=>(const OutcomePair&, const OutcomePair&) = default;
};

std::string to_string(const OutcomePair& o);

struct Corner {
  Eigen::Vector2d point = Eigen::Vector2d::Zero();
  OutcomePair outcome;
};

struct Quadrilateral {
  std::array<Corner, 4> corners;

  double perimeter() const;
  Eigen::Vector2d centroid() const;
  /// The four outcome pairs are pairwise distinct.
  bool is_bracketing() const;
};

struct BtoBOptions {
  double anchor = 0;
  double horizon = 10;       // for the outcome of refinement points
  double tol = 1e-8;         // final perimeter
  double check_horizon = 5;  // for classifying the returned orbit
  int max_iterations = 200;
  IntegratorOptions integrator;
  int threads = 0;
};

OutcomePair classify_outcome(const Params& p, double anchor, const Eigen::Vector2d& uv,
                             double horizon, const IntegratorOptions& opts = {});

struct BtoBCheck {
  AsymptoticClass left = AsymptoticClass::Unresolved;
  AsymptoticClass right = AsymptoticClass::Unresolved;
  int poles = 0;
  unsigned zero_mask = 0;  // components with a regular zero
  std::array<int, 3> zero_counts{};
};

/// Integrates from uv to +-check_horizon and reports the end classes and the
/// regular zeros met on the way.
BtoBCheck check_btob(const Params& p, double anchor, const Eigen::Vector2d& uv,
                     double check_horizon, const IntegratorOptions& opts = {});

struct BtoBResult {
  Eigen::Vector2d uv = Eigen::Vector2d::Zero();
  Quadrilateral quad;
  std::vector<double> perimeters;  // after each accepted iteration, starting with the seed
  bool used_fallback = false;
  BtoBCheck check;
};

/// Shrinks a bracketing quadrilateral around the crossing of two basin
/// boundaries. Each iteration classifies the edge midpoints and the centroid
/// and keeps the smallest 4-point bracket whose perimeter is at most 2/3 of
/// the current one. If none qualifies, a 5x5 grid over the current bounding
/// box is tried once before failing with BracketLost.
BtoBResult find_btob(const Params& p, const Quadrilateral& seed, const BtoBOptions& opts = {});

/// Bracketing quadrilaterals from a coarse outcome grid over the window:
/// 2x2 blocks first, then up to 4x4 blocks when no 2x2 block brackets.
std::vector<Quadrilateral> find_btob_seeds(const Params& p, const Window& window, int res,
                                           const BtoBOptions& opts = {});

/// Seeds the search from a coarse grid and returns the first connecting orbit
/// whose check classes are (left, right).
BtoBResult find_btob_pair(const Params& p, AsymptoticClass left, AsymptoticClass right,
                          const Window& window, int res, const BtoBOptions& opts = {});

// ---------------------------------------------------------------------------
// C to C region

struct CcRegionOptions {
  double anchor = 0;
  double tol = 1e-6;
  int rays = 64;
  double horizon = 10;
  Window window;
  int scan_res = 41;
  double max_radius = 8;
  double march_step = 0.05;
  IntegratorOptions integrator;
  int threads = 0;
};

struct CcRegion {
  Eigen::Vector2d interior = Eigen::Vector2d::Zero();
  std::vector<Eigen::Vector2d> boundary;  // midpoints of the final brackets
  std::vector<Eigen::Vector2d> inside;    // last C to C point on each ray
  std::vector<Eigen::Vector2d> outside;   // first other point on each ray
  double area = 0;
};

/// Pole-free on both sides with C asymptotics at both ends.
bool is_cc(const Params& p, double anchor, const Eigen::Vector2d& uv, double horizon,
           const IntegratorOptions& opts = {});

/// Boundary of the C to C region by bisection along rays from an interior
/// point found on a coarse scan. Throws NoInteriorPoint when the scan has no
/// C to C cell.
CcRegion trace_cc_region(const Params& p, const CcRegionOptions& opts = {});

double polygon_area(const std::vector<Eigen::Vector2d>& pts);

// ---------------------------------------------------------------------------
// Quartic first-order equation for the alpha1 = 2 solutions

/// The degree-4 relation between w, dw/dz and z claimed for beta = -8.
double quartic_relation(double w, double dw, double z, double alpha);

struct QuarticOptions {
  double x0 = 0;    // abscissa of the Riccati initial condition
  double f2 = 0.5;  // f2(x0); f1(x0) = 0 and f3(x0) = x0 - f2(x0)
  int points = 101;
};

struct QuarticReport {
  Params transformed;
  double p4_alpha = 0;
  double p4_beta = 0;
  double spiv_residual = 0;     // max |g' - rhs(g)| over the sample points
  double quartic_residual = 0;  // max |Q| over the sample points
  double quartic_relative = 0;  // max |Q| / (sum of |terms|)
  int points = 0;
};

/// Integrates the f1 = 0 solution at p0 (alpha1 = 0), maps it pointwise by
/// the word, and evaluates the sPIV residual at the transformed parameters
/// and the quartic relation for component 1 on [x_lo, x_hi]. Throws
/// PreconditionFailed unless the word sends alpha1 to 2, and IntermediatePole
/// when the pointwise map meets f1 = 0 inside the interval.
QuarticReport quartic_residual_check(const Params& p0, const GroupWord& w, double x_lo,
                                     double x_hi, const QuarticOptions& opts = {});

}  // namespace spiv
