#pragma once

// Integration of the symmetric P_IV system through its movable poles.
//
// Away from poles the system is integrated in the original variables (chart
// F). Near a pole of type A_k the integrator switches to the chart
//
//   z1 = 1 / f_{k+1},  z2 = f_{k+1} + f_{k+2},  z3 = alpha_k f_{k+1} + f_{k+1}^2 f_k
//
// (indices mod 3) in which the pole is a regular zero crossing of z1.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spiv/core.hpp"

namespace spiv {

enum class Chart { F, A1, A2, A3 };

std::string to_string(Chart c);
/// Pole type (1..3) handled by an A chart; 0 for F.
inline int chart_index(Chart c) { return static_cast<int>(c); }
inline Chart chart_for_pole(int k) { return static_cast<Chart>(k); }

struct ChartState {
  Chart kind = Chart::F;
  Eigen::Vector3d coords = Eigen::Vector3d::Zero();
};

enum class AsymptoticClass { C, B1, B2, B3, Unresolved };

std::string to_string(AsymptoticClass c);
AsymptoticClass parse_asymptotic_class(const std::string& text);

enum class EventKind { Pole, Zero };

/// A pole of type A_index at x, or a regular zero of component `index` (1..3)
/// crossing in `direction` (+1 or -1).
struct Event {
  EventKind kind = EventKind::Pole;
  int index = 0;
  double x = 0;
  int direction = 0;
};

struct Sample {
  double x = 0;
  Chart chart = Chart::F;
  Eigen::Vector3d coords = Eigen::Vector3d::Zero();
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
};

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double switch_threshold = 10.0;  // enter chart A_k
  double exit_threshold = 5.0;     // leave chart A_k
  double tol_event = 1e-10;
  int pole_cap = 10;  // stop at the end of the step that crosses this many poles
  double initial_step = 1e-3;
  double max_step = 0.5;
  double min_step = 1e-13;
  long max_steps = 5'000'000;
  double decision_horizon = 10.0;
  bool record_steps = true;
  /// Extra points at which the dense output is sampled (any order).
  std::vector<double> output_points;
};

struct Trajectory {
  Params params;
  IntegratorOptions options;
  double x_from = 0;
  double x_to = 0;    // requested end point
  double x_end = 0;   // reached end point
  bool pole_cap_hit = false;
  std::vector<Sample> samples;  // ordered in the direction of integration
  std::vector<Event> events;    // ordered in the direction of integration
  AsymptoticClass left_class = AsymptoticClass::Unresolved;
  AsymptoticClass right_class = AsymptoticClass::Unresolved;

  int pole_count() const;
  std::vector<Event> poles() const;
  double x_min() const { return std::min(x_from, x_end); }
  double x_max() const { return std::max(x_from, x_end); }
  /// Last sample (the state at x_end).
  const Sample& end_sample() const { return samples.back(); }
};

// ---------------------------------------------------------------------------
// Vector fields

/// d/dx (f1, f2, f3). The system is autonomous once x is eliminated through
/// the constraint, so x does not enter.
template <class Scalar>
Vector3<Scalar> rhs_f(const Vector3<Scalar>& f, const Params& p) {
  Vector3<Scalar> d;
  d[0] = f[0] * (f[1] - f[2]) + p[0];
  d[1] = f[1] * (f[2] - f[0]) + p[1];
  d[2] = f[2] * (f[0] - f[1]) + p[2];
  return d;
}

inline Eigen::Vector3d rhs_f(const SystemState& s, const Params& p) {
  return rhs_f<double>(s.f, p);
}

/// Vector field of chart A_k (k = 1..3) obtained by pushing rhs_f forward.
Eigen::Vector3d rhs_chart(int k, const Eigen::Vector3d& z, const Params& p);

/// A3-chart field whose z2 equation has -alpha3 z1 z3 where -alpha3 z1 z2
/// belongs; kept only for comparison against rhs_chart.
Eigen::Vector3d rhs_chart_variant_a3(const Eigen::Vector3d& z, const Params& p);

Eigen::Vector3d to_chart(int k, const Eigen::Vector3d& f, const Params& p);
Eigen::Vector3d from_chart(int k, const Eigen::Vector3d& z, const Params& p);

/// Coordinates of state f in the requested chart. Throws ChartSingular when
/// the pivot component f_{k+1} vanishes.
ChartState chart_transform(const Eigen::Vector3d& f, Chart target, const Params& p);
Eigen::Vector3d chart_to_f(const ChartState& c, const Params& p);

/// Chart the integrator would choose at f: A_k when f_{k+1}, f_{k+2} exceed the
/// threshold with opposite signs and f_k is the smallest component.
Chart select_chart(const Eigen::Vector3d& f, double threshold);

// ---------------------------------------------------------------------------

Trajectory integrate(const Eigen::Vector3d& f0, const Params& p, double x_from,
                     double x_to, const IntegratorOptions& opts = {});
inline Trajectory integrate(const SystemState& s, const Params& p, double x_to,
                            const IntegratorOptions& opts = {}) {
  return integrate(s.f, p, s.x, x_to, opts);
}

/// Continues a trajectory that stopped at x_end towards a new end point,
/// keeping the pole count (the cap applies to the combined trajectory).
void extend(Trajectory& t, double x_to);

/// Endpoint test at a single state: C if all f_i/x are within 0.1 of 1/3;
/// B_k if f_k/x is within 0.1 of 1 and the other components are below 1.
AsymptoticClass classify_state(double x, const Eigen::Vector3d& f);

enum class Side { Left, Right };

/// Classifies the behaviour at the requested end of the trajectory. When the
/// endpoint test is inconclusive the trajectory is extended once to three
/// times the end abscissa and tested again; a trajectory that stopped at the
/// pole cap on that side is Unresolved.
AsymptoticClass classify_asymptotics(Trajectory& t, Side side);

/// True when no component has two zero events between consecutive poles.
bool zero_events_separated_by_poles(const Trajectory& t);

}  // namespace spiv
