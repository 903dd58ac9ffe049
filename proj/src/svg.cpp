#include "bfc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bfc {

namespace {

constexpr double kWidth = 760, kHeight = 480;
constexpr double kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void include(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  void finalize() {
    if (!(xmin <= xmax)) { xmin = 0; xmax = 1; }
    if (!(ymin <= ymax)) { ymin = 0; ymax = 1; }
    const double xpad = std::max(1e-12, (xmax - xmin)) * 0.05;
    const double ypad = std::max(1e-12, (ymax - ymin)) * 0.05;
    xmin -= xpad; xmax += xpad;
    ymin -= ypad; ymax += ypad;
    if (xmax - xmin < 1e-12) { xmin -= 0.5; xmax += 0.5; }
    if (ymax - ymin < 1e-12) { ymin -= 0.5; ymax += 0.5; }
  }
  double px(double x) const {
    return kMarginL + (x - xmin) / (xmax - xmin) * (kWidth - kMarginL - kMarginR);
  }
  double py(double y) const {
    return kHeight - kMarginB - (y - ymin) / (ymax - ymin) * (kHeight - kMarginT - kMarginB);
  }
};

void open_svg(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
     << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
     << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";
}

void draw_axes(std::ostringstream& os, const Bounds& b, const std::string& x_label,
               const std::string& y_label) {
  os << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
     << kWidth - kMarginL - kMarginR << "\" height=\"" << kHeight - kMarginT - kMarginB
     << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = b.xmin + (b.xmax - b.xmin) * i / 5.0;
    const double fy = b.ymin + (b.ymax - b.ymin) * i / 5.0;
    const double px = b.px(fx), py = b.py(fy);
    os << "<line x1=\"" << fmt(px) << "\" y1=\"" << kMarginT << "\" x2=\"" << fmt(px)
       << "\" y2=\"" << kHeight - kMarginB
       << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    os << "<line x1=\"" << kMarginL << "\" y1=\"" << fmt(py) << "\" x2=\""
       << kWidth - kMarginR << "\" y2=\"" << fmt(py)
       << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    os << "<text x=\"" << fmt(px) << "\" y=\"" << kHeight - kMarginB + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fx, "%.4g") << "</text>\n";
    os << "<text x=\"" << kMarginL - 6 << "\" y=\"" << fmt(py + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fy, "%.4g") << "</text>\n";
  }
  os << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 16 "
     << (kMarginT + kHeight - kMarginB) / 2 << ")\">" << y_label << "</text>\n";
}

void draw_polyline(std::ostringstream& os, const Bounds& b, const std::vector<double>& xs,
                   const std::vector<double>& ys, const std::string& color, bool dashed,
                   double width = 1.5) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
     << "\"";
  if (dashed) os << " stroke-dasharray=\"6 4\"";
  os << " points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << fmt(b.px(xs[i])) << "," << fmt(b.py(ys[i])) << " ";
  os << "\"/>\n";
}

// Fixed isometric projection for 3-D data.
std::pair<double, double> project(const Eigen::VectorXd& q) {
  if (q.size() == 2) return {q(0), q(1)};
  return {(q(0) - q(1)) * 0.8660254037844386, (q(0) + q(1)) * 0.5 + q(2)};
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<Series>& series) {
  Bounds b;
  for (const Series& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) b.include(s.x[i], s.y[i]);
  b.finalize();

  std::ostringstream os;
  open_svg(os, title);
  draw_axes(os, b, x_label, y_label);
  for (const Series& s : series) draw_polyline(os, b, s.x, s.y, s.color, s.dashed);
  // legend
  double ly = kMarginT + 14;
  for (const Series& s : series) {
    if (s.label.empty()) continue;
    os << "<line x1=\"" << kWidth - kMarginR - 150 << "\" y1=\"" << fmt(ly - 4)
       << "\" x2=\"" << kWidth - kMarginR - 126 << "\" y2=\"" << fmt(ly - 4)
       << "\" stroke=\"" << s.color << "\" stroke-width=\"2\""
       << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    os << "<text x=\"" << kWidth - kMarginR - 120 << "\" y=\"" << fmt(ly)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
  return os.str();
}

std::string trajectory_svg(const SimLog& log, const DesiredMotion& motion,
                           const OrientedGraph& g) {
  const int d = log.d;
  const int n = g.vertex_count();
  Bounds b;
  std::vector<std::vector<double>> ax(n), ay(n), dx(n), dy(n);
  for (std::size_t s = 0; s < log.times.size(); ++s) {
    Eigen::VectorXd p_star = eval(motion, log.times[s]).p_star;
    for (int i = 0; i < n; ++i) {
      auto [x1, y1] = project(log.states[s].segment(i * d, d));
      auto [x2, y2] = project(p_star.segment(i * d, d));
      ax[i].push_back(x1);
      ay[i].push_back(y1);
      dx[i].push_back(x2);
      dy[i].push_back(y2);
      b.include(x1, y1);
      b.include(x2, y2);
    }
  }
  b.finalize();

  std::ostringstream os;
  open_svg(os, "agent trajectories (" + std::to_string(d) + "-D)");
  draw_axes(os, b, d == 2 ? "x" : "isometric u", d == 2 ? "y" : "isometric v");

  // graph edges at the final sample
  const Eigen::VectorXd& last = log.states.back();
  for (const Edge& e : g.edges()) {
    auto [x1, y1] = project(last.segment(e.tail * d, d));
    auto [x2, y2] = project(last.segment(e.head * d, d));
    os << "<line x1=\"" << fmt(b.px(x1)) << "\" y1=\"" << fmt(b.py(y1)) << "\" x2=\""
       << fmt(b.px(x2)) << "\" y2=\"" << fmt(b.py(y2))
       << "\" stroke=\"#444444\" stroke-width=\"1.2\"/>\n";
  }

  for (int i = 0; i < n; ++i) {
    const std::string color = kPalette[i % kPaletteSize];
    draw_polyline(os, b, dx[i], dy[i], color, /*dashed=*/true, 1.0);
    draw_polyline(os, b, ax[i], ay[i], color, /*dashed=*/false, 1.5);
    os << "<circle cx=\"" << fmt(b.px(ax[i].front())) << "\" cy=\""
       << fmt(b.py(ay[i].front())) << "\" r=\"4\" fill=\"white\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
    os << "<circle cx=\"" << fmt(b.px(ax[i].back())) << "\" cy=\""
       << fmt(b.py(ay[i].back())) << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    os << "<text x=\"" << fmt(b.px(ax[i].back()) + 6) << "\" y=\""
       << fmt(b.py(ay[i].back()) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">"
       << (i + 1) << "</text>\n";
  }
  if (log.aborted)
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 30
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
          "fill=\"#d62728\">run aborted at t="
       << fmt(log.abort_time, "%.3g") << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace bfc
