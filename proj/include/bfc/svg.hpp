#pragma once

#include <string>
#include <vector>

#include "bfc/graph.hpp"
#include "bfc/simlog.hpp"
#include "bfc/trajectory.hpp"

namespace bfc {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

/// Minimal line chart. Output is a deterministic byte stream for fixed input.
std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<Series>& series);

/// Plane plot of agent trajectories (2-D directly, 3-D through a fixed
/// isometric projection): solid actual paths, dashed desired paths, graph
/// edges at the final sample, circles at the initial positions.
std::string trajectory_svg(const SimLog& log, const DesiredMotion& motion,
                           const OrientedGraph& g);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace bfc
