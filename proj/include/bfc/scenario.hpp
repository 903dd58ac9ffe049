#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "bfc/control.hpp"
#include "bfc/geometry.hpp"
#include "bfc/graph.hpp"
#include "bfc/simlog.hpp"
#include "bfc/trajectory.hpp"

namespace bfc {

enum class RunMode { Simulate, Observe, Analyze };

/// Fully assembled experiment description.
struct Scenario {
  std::string name;
  OrientedGraph graph{2, {Edge{0, 1}}};
  DesiredMotion motion;
  Eigen::VectorXd p0;  // true initial configuration
  ControlParams control;
  double horizon = 100.0;
  double dt = 0.01;
  double window_T = 0.0;  // 0 → pe_window() picks a default
  std::uint64_t seed = 0;
  double eps_min = kDefaultEpsMin;
  RunMode mode = RunMode::Simulate;
  std::string csv_path;
  std::string svg_path;
  /// Asserted at validation: Uᵀ(p0 − p*(0)) = 0, the §-style coincident
  /// initial-centroid condition.
  bool require_zero_centroid_error = false;

  /// PE window: window_T if declared, else one rotation period for periodic
  /// motions, else horizon/4.
  double pe_window() const;

  /// Checks the scenario invariants (dt, horizon, gain positivity, dimension
  /// consistency, initial separation, centroid condition). Throws bfc errors.
  void validate() const;
};

/// Runs the closed loop and fills the log. Refuses disconnected graphs;
/// a collision-guard trip aborts the run, keeping the partial log flagged.
SimLog run_scenario(const Scenario& s);

}  // namespace bfc
