#include "bfc/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bfc/csv.hpp"
#include "bfc/errors.hpp"
#include "bfc/scenario_file.hpp"
#include "bfc/svg.hpp"

namespace bfc {

namespace {

std::string axis_name(int j) {
  static const char* names[] = {"x", "y", "z"};
  return j < 3 ? names[j] : "c" + std::to_string(j);
}

Scenario load_with_overrides(const std::string& path, const CliOverrides& o) {
  Scenario s = load_scenario_file(resolve_scenario_path(path));
  if (o.dt) s.dt = *o.dt;
  if (o.horizon) s.horizon = *o.horizon;
  if (o.k_p) s.control.k_p = *o.k_p;
  if (o.window) s.window_T = *o.window;
  if (o.seed) s.seed = *o.seed;
  if (o.csv) s.csv_path = *o.csv;
  if (o.svg) s.svg_path = *o.svg;
  return s;
}

std::string svg_base(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".svg")
    return path.substr(0, path.size() - 4);
  return path;
}

std::string describe(const Scenario& s) {
  std::ostringstream os;
  os << "scenario '" << s.name << "': n=" << s.graph.vertex_count()
     << " agents, d=" << s.motion.d << ", m=" << s.graph.edge_count()
     << " edges, k_p=" << s.control.k_p << ", horizon=" << s.horizon << ", dt=" << s.dt;
  return os.str();
}

}  // namespace

Table simulate_table(const SimLog& log, const OrientedGraph& g) {
  const int d = log.d;
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<std::string> header{"t"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      header.push_back("p" + std::to_string(i + 1) + "_" + axis_name(j));
  header.insert(header.end(),
                {"p_tilde_norm", "delta_norm", "centroid_drift", "min_edge_dist"});
  for (int k = 0; k < m; ++k) {
    const std::string base = "bearing" + std::to_string(k + 1);
    if (d == 2) {
      header.push_back(base + "_angle");
    } else if (d == 3) {
      header.push_back(base + "_azimuth");
      header.push_back(base + "_elevation");
    } else {
      for (int j = 0; j < d; ++j) header.push_back(base + "_" + axis_name(j));
    }
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(log.times.size());
  for (std::size_t s = 0; s < log.times.size(); ++s) {
    std::vector<double> row{log.times[s]};
    for (Eigen::Index i = 0; i < log.states[s].size(); ++i)
      row.push_back(log.states[s](i));
    row.push_back(log.p_tilde_norm[s]);
    row.push_back(log.delta_norm[s]);
    row.push_back(log.centroid_drift[s]);
    row.push_back(log.min_edge_dist[s]);
    for (int k = 0; k < m; ++k) {
      Eigen::VectorXd gk = log.bearings[s].segment(k * d, d);
      if (d == 2) {
        row.push_back(std::atan2(gk(1), gk(0)));
      } else if (d == 3) {
        row.push_back(std::atan2(gk(1), gk(0)));
        row.push_back(std::asin(std::clamp(gk(2), -1.0, 1.0)));
      } else {
        for (int j = 0; j < d; ++j) row.push_back(gk(j));
      }
    }
    rows.push_back(std::move(row));
  }
  return {header, rows};
}

Table observe_table(const ObserverLog& log) {
  const int d = log.d;
  const int n = static_cast<int>(log.p_hat.front().size()) / d;
  std::vector<std::string> header{"t", "zeta_norm", "u_zeta_norm"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      header.push_back("err" + std::to_string(i + 1) + "_" + axis_name(j));
  std::vector<std::vector<double>> rows;
  rows.reserve(log.times.size());
  for (std::size_t s = 0; s < log.times.size(); ++s) {
    std::vector<double> row{log.times[s], log.zeta_norm[s], log.u_zeta_norm[s]};
    for (Eigen::Index i = 0; i < log.estimate_error[s].size(); ++i)
      row.push_back(log.estimate_error[s](i));
    rows.push_back(std::move(row));
  }
  return {header, rows};
}

Table analyze_table(const BPEReport& report) {
  std::vector<std::string> header{"window_start_t", "lb_relative_min"};
  for (std::size_t k = 0; k < report.per_edge.size(); ++k)
    header.push_back("edge" + std::to_string(k + 1) + "_min");
  std::vector<std::vector<double>> rows;
  rows.reserve(report.witness.window_minima.size());
  for (std::size_t i = 0; i < report.witness.window_minima.size(); ++i) {
    std::vector<double> row{report.witness.window_minima[i].t_start,
                            report.witness.window_minima[i].min_eig};
    for (const PEWitness& w : report.per_edge)
      row.push_back(i < w.window_minima.size() ? w.window_minima[i].min_eig : 0.0);
    rows.push_back(std::move(row));
  }
  return {header, rows};
}

int cmd_simulate(const std::string& path, const CliOverrides& o, std::ostream& out,
                 std::ostream& err) {
  Scenario s;
  try {
    s = load_with_overrides(path, o);
  } catch (const ScenarioParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  s.mode = RunMode::Simulate;
  try {
    SimLog log = run_scenario(s);
    out << describe(s) << "\n";
    if (!s.csv_path.empty()) {
      auto [header, rows] = simulate_table(log, s.graph);
      write_csv(s.csv_path, header, rows);
      out << "wrote " << s.csv_path << "\n";
    }
    if (!s.svg_path.empty()) {
      const std::string base = svg_base(s.svg_path);
      std::vector<Series> series{
          {"|p_tilde|", log.times, log.p_tilde_norm, "#1f77b4", false},
          {"|delta|", log.times, log.delta_norm, "#d62728", false}};
      write_text_file(base + "_errors.svg",
                      line_chart_svg("formation error norms", "t [s]", "error norm",
                                     series));
      write_text_file(base + "_trajectory.svg", trajectory_svg(log, s.motion, s.graph));
      out << "wrote " << base << "_errors.svg\n";
      out << "wrote " << base << "_trajectory.svg\n";
    }
    out << "final |p_tilde| = " << log.p_tilde_norm.back()
        << ", final |delta| = " << log.delta_norm.back()
        << ", max centroid drift = " << centroid_drift(log) << "\n";
    if (log.aborted) {
      err << "aborted run: " << log.abort_reason << "\n";
      return kExitAborted;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssumption;
  }
}

int cmd_observe(const std::string& path, const CliOverrides& o, std::ostream& out,
                std::ostream& err) {
  Scenario s;
  try {
    s = load_with_overrides(path, o);
  } catch (const ScenarioParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  s.mode = RunMode::Observe;
  try {
    s.validate();
    const int dn = s.motion.d * s.graph.vertex_count();

    PEOptions pe_opts;
    pe_opts.eps_min = s.eps_min;
    PEWitness witness =
        is_pe_bearing_laplacian(s.motion, s.graph, s.pe_window(), s.horizon, s.dt, pe_opts);
    if (!witness.pe)
      err << "warning: true motion is not BPE on the scanned horizon (mu = "
          << witness.mu << "); recovery up to translation is not guaranteed\n";

    Eigen::VectorXd p_hat0 = default_observer_init(dn, s.seed);
    ObserverLog log = run_observer(s.motion, s.graph, p_hat0, s.horizon, s.dt, s.eps_min);

    out << describe(s) << "\n";
    out << "observer seed " << s.seed << ", |zeta(0)| = " << log.zeta_norm.front()
        << ", |zeta(" << s.horizon << ")| = " << log.zeta_norm.back() << "\n";
    out << "translation offset (expected = U U^T (p_hat0 - p0)/n):\n";
    out << "  expected:";
    for (Eigen::Index i = 0; i < s.motion.d; ++i)
      out << " " << log.expected_offset(i);
    out << "\n  observed:";
    for (Eigen::Index i = 0; i < s.motion.d; ++i) out << " " << log.final_offset(i);
    out << "\n  mismatch |observed - expected| = "
        << (log.final_offset - log.expected_offset).norm() << "\n";

    if (!s.csv_path.empty()) {
      auto [header, rows] = observe_table(log);
      write_csv(s.csv_path, header, rows);
      out << "wrote " << s.csv_path << "\n";
    }
    if (!s.svg_path.empty()) {
      const std::string base = svg_base(s.svg_path);
      std::vector<Series> series{
          {"|zeta|", log.times, log.zeta_norm, "#1f77b4", false}};
      write_text_file(base + "_zeta.svg",
                      line_chart_svg("observer error", "t [s]", "|zeta|", series));
      out << "wrote " << base << "_zeta.svg\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssumption;
  }
}

int cmd_analyze(const std::string& path, const CliOverrides& o, std::ostream& out,
                std::ostream& err) {
  Scenario s;
  try {
    s = load_with_overrides(path, o);
  } catch (const ScenarioParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  s.mode = RunMode::Analyze;
  try {
    PEOptions pe_opts;
    pe_opts.eps_min = s.eps_min;
    const double T = s.pe_window();
    BPEReport rep = is_bpe(s.motion, s.graph, T, s.horizon, s.dt, pe_opts);

    out << describe(s) << "\n";
    out << "BPE verdict: " << (rep.bpe ? "true" : "false") << "\n";
    out << "  spanning tree: " << (rep.spanning_tree ? "yes" : "no")
        << ", acyclic: " << (rep.acyclic ? "yes" : "no") << "\n";
    out << "  relative PE witness: T = " << rep.witness.T << ", mu = " << rep.witness.mu
        << " (floor " << pe_opts.mu_floor << "), windows scanned: "
        << rep.witness.window_minima.size() << "\n";
    out << "  per-edge bearings:\n";
    for (std::size_t k = 0; k < rep.per_edge.size(); ++k) {
      const Edge& e = s.graph.edges()[k];
      out << "    edge " << k + 1 << " (" << e.tail + 1 << "-" << e.head + 1
          << "): " << (rep.per_edge[k].pe ? "PE    " : "not PE")
          << "  mu = " << rep.per_edge[k].mu << "\n";
    }
    out << "  PE edges: " << rep.pe_edge_count << " of " << rep.per_edge.size() << "\n";
    int rank_min = rep.max_rank, rank_max = 0;
    for (const RankSample& r : rep.rank_trace) {
      rank_min = std::min(rank_min, r.rank);
      rank_max = std::max(rank_max, r.rank);
    }
    out << "  rank(L_B*) over horizon: [" << rank_min << ", " << rank_max
        << "], maximal rank dn-d-1 = " << rep.max_rank
        << (rep.rank_always_maximal ? " (always maximal)" : "") << "\n";
    if (s.motion.d == 2)
      out << "  2-D minimum PE-edge bound: " << rep.min_pe_bound << "\n";
    out << "  structural consistency:\n";
    std::istringstream ss(rep.structural.summary());
    for (std::string line; std::getline(ss, line);) out << "    " << line << "\n";

    if (!s.csv_path.empty()) {
      auto [header, rows] = analyze_table(rep);
      write_csv(s.csv_path, header, rows);
      out << "wrote " << s.csv_path << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitAssumption;
  }
}

int cmd_batch(const std::string& command, const std::string& dir, const CliOverrides& o,
              std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) {
    err << "batch: not a directory: " << dir << "\n";
    return kExitParse;
  }
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".scn")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "batch: no .scn files in " << dir << "\n";
    return kExitParse;
  }

  struct Result {
    int status;
    std::string out_text, err_text;
  };
  std::vector<std::future<Result>> futures;
  futures.reserve(files.size());
  for (const std::string& f : files)
    futures.push_back(std::async(std::launch::async, [&, f]() {
      std::ostringstream so, se;
      int status;
      if (command == "simulate")
        status = cmd_simulate(f, o, so, se);
      else if (command == "observe")
        status = cmd_observe(f, o, so, se);
      else
        status = cmd_analyze(f, o, so, se);
      return Result{status, so.str(), se.str()};
    }));

  int worst = kExitOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Result r = futures[i].get();
    out << "=== " << files[i] << " (status " << r.status << ")\n" << r.out_text;
    if (!r.err_text.empty()) err << r.err_text;
    worst = std::max(worst, r.status);
  }
  out << "batch: " << files.size() << " scenario(s), worst status " << worst << "\n";
  return worst;
}

}  // namespace bfc
