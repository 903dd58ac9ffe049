// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line. The binary exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bfc/control.hpp"
#include "bfc/geometry.hpp"
#include "bfc/linalg.hpp"
#include "bfc/observer.hpp"
#include "bfc/pe.hpp"
#include "bfc/scenario.hpp"
#include "bfc/scenario_file.hpp"
#include "test_support.hpp"

using namespace bfc;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double runtime_seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t index_at(const std::vector<double>& times, double t) {
  for (std::size_t i = 0; i < times.size(); ++i)
    if (std::abs(times[i] - t) < 1e-9) return i;
  return times.size() - 1;
}

// --- criterion 1: §V 2-D reproduction ----------------------------------------

SimLog criterion_1(const Scenario& square) {
  SimLog log;
  const double secs = runtime_seconds([&] { log = run_scenario(square); });

  bool monotone = true;
  const std::size_t i5 = index_at(log.times, 5.0);
  for (std::size_t i = i5 + 1; i < log.p_tilde_norm.size(); ++i)
    if (log.p_tilde_norm[i] > log.p_tilde_norm[i - 1] + 1e-9) monotone = false;

  const double ratio = log.p_tilde_norm[index_at(log.times, 50.0)] / log.p_tilde_norm[0];
  const bool pass = monotone && ratio <= 0.01 && secs < 5.0 && !log.aborted;
  report(1, "2-D square reproduction", pass,
         "|p_tilde(50)|/|p_tilde(0)| = " + fmt("%.2e", ratio) +
             " (<= 1e-2), monotone after 5 s: " + (monotone ? "yes" : "NO") +
             ", runtime " + fmt("%.2f", secs) + " s (< 5)");
  return log;
}

// --- criterion 2: §V 3-D reproduction ----------------------------------------

SimLog criterion_2(const Scenario& pyramid) {
  SimLog log;
  const double secs = runtime_seconds([&] { log = run_scenario(pyramid); });

  const double ratio = log.delta_norm[index_at(log.times, 50.0)] / log.delta_norm[0];
  bfc_test::LinearFit fit = bfc_test::decay_fit(log.times, log.delta_norm, 5.0, 50.0);
  const bool pass =
      ratio <= 0.05 && fit.slope < 0.0 && fit.r2 >= 0.95 && secs < 5.0 && !log.aborted;
  report(2, "3-D pyramid reproduction", pass,
         "|delta(50)|/|delta(0)| = " + fmt("%.2e", ratio) + " (<= 5e-2), log-fit slope " +
             fmt("%.3f", fit.slope) + ", R^2 = " + fmt("%.4f", fit.r2) +
             " (>= 0.95), runtime " + fmt("%.2f", secs) + " s");
  return log;
}

// --- criterion 3: centroid invariance ----------------------------------------

void criterion_3(const SimLog& square, const SimLog& pyramid) {
  const double d2 = centroid_drift(square);
  const double d3 = centroid_drift(pyramid);
  report(3, "centroid invariance", d2 <= 1e-6 && d3 <= 1e-6,
         "max drift square2d = " + fmt("%.2e", d2) + ", pyramid3d = " + fmt("%.2e", d3) +
             " (<= 1e-6)");
}

// --- criterion 4: observer recovery up to translation -------------------------

void criterion_4(const Scenario& square) {
  double worst_final = 0.0, worst_u = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Eigen::VectorXd p_hat0 = default_observer_init(8, seed);
    ObserverLog log =
        run_observer(square.motion, square.graph, p_hat0, square.horizon, square.dt);
    worst_final = std::max(
        worst_final, (log.final_offset - log.expected_offset).norm());
    for (double uz : log.u_zeta_norm) worst_u = std::max(worst_u, uz);
  }
  report(4, "observer: translation-offset recovery", worst_final <= 1e-3 && worst_u <= 1e-8,
         "worst final |p_hat - p - UU'(p_hat0-p0)/n| over 10 seeds = " +
             fmt("%.2e", worst_final) + " (<= 1e-3), worst |U' zeta| = " +
             fmt("%.2e", worst_u) + " (<= 1e-8)");
}

// --- criterion 5: PE oracle agreement ----------------------------------------

void criterion_5() {
  const double omega = M_PI / 6.0, T = 12.0, dt = 0.05;
  std::vector<Eigen::VectorXd> rot, constant;
  for (int k = 0; k <= 960; ++k) {
    const double t = k * dt;
    rot.push_back(Eigen::Vector2d(std::cos(omega * t), std::sin(omega * t)));
    constant.push_back(Eigen::Vector2d(0.6, 0.8));
  }
  PEWitness wr = is_pe_direction(rot, dt, T);
  PEWitness wc = is_pe_direction(constant, dt, T);
  const bool mu_ok = std::abs(wr.mu - 6.0) <= 0.05;

  Rng rng(2026);
  int agreements = 0;
  for (int i = 0; i < 50; ++i) {
    bfc_test::SmoothDirection tr = bfc_test::random_smooth_direction(rng);
    const bool by_integral = is_pe_direction(tr.y, tr.dt, tr.T).pe;
    const bool by_derivative = pe_by_derivative(tr.y_dot, tr.dt, tr.T, tr.eps);
    if (by_integral == by_derivative) ++agreements;
  }
  report(5, "PE oracle agreement", mu_ok && wr.pe && !wc.pe && agreements == 50,
         "rotating-bearing mu = " + fmt("%.4f", wr.mu) +
             " (6 +- 0.05), constant bearing PE = " + (wc.pe ? "true (BAD)" : "false") +
             ", derivative/integral agreement " + std::to_string(agreements) + "/50");
}

// --- criterion 6: structural lemma suite --------------------------------------

void criterion_6() {
  using bfc_test::TreeMotionKind;
  Rng rng(71);

  // (a) acyclic equivalence on 20 random trees
  int tree_ok = 0;
  std::vector<const BPEReport*> d2_positive;  // for (c)
  std::vector<BPEReport> reports;
  std::vector<int> edge_counts, vertex_counts;
  reports.reserve(20);
  for (int iter = 0; iter < 20; ++iter) {
    const int n = rng.uniform_int(2, 6);
    const int d = rng.uniform_int(2, 3);
    const TreeMotionKind kind = static_cast<TreeMotionKind>(iter % 3);
    bfc_test::TreeInstance inst = bfc_test::random_tree_instance(rng, n, d, kind);
    BPEReport rep = is_bpe(inst.motion, inst.graph, 12.0, 36.0, 0.1);
    const bool all_pe = rep.pe_edge_count == inst.graph.edge_count();
    if (rep.bpe == all_pe && rep.structural.acyclic_rule_holds) ++tree_ok;
    reports.push_back(std::move(rep));
    edge_counts.push_back(inst.graph.edge_count());
    vertex_counts.push_back(inst.graph.vertex_count());
  }

  // (b) rigid-to-persistent on the constructed cycle instances; each also
  // certifies that Pi is not PE while L_B is (Remark-1 witness)
  auto cycle_case = [&](const DesiredMotion& motion, const OrientedGraph& graph,
                        int expected_rank) {
    BPEReport rep = is_bpe(motion, graph, 12.0, 48.0, 0.05);
    IncidenceMatrix inc = incidence_matrix(graph, motion.d);
    std::vector<Eigen::MatrixXd> pis;
    for (int k = 0; k <= 960; ++k) {
      MotionSample s = eval(motion, k * 0.05);
      pis.push_back(edge_geometry(Configuration(motion.d, s.p_star), inc).Pi);
    }
    const bool pi_not_pe = !is_pe_matrix(pis, 0.05, 12.0).pe;
    const bool ok = rep.bpe && rep.rank_always_maximal && rep.max_rank == expected_rank &&
                    rep.pe_edge_count == 1 && pi_not_pe &&
                    rep.structural.rigidity_rule_holds;
    reports.push_back(std::move(rep));
    edge_counts.push_back(graph.edge_count());
    vertex_counts.push_back(graph.vertex_count());
    return ok;
  };
  const bool tri_ok =
      cycle_case(bfc_test::triangle_one_pe_motion(), bfc_test::triangle_graph(), 3);
  const bool cyc_ok =
      cycle_case(bfc_test::cycle3d_one_pe_motion(), bfc_test::cycle4_graph(), 8);

  // (c) counting bound over every d = 2 BPE-positive verdict collected above
  int counting_checked = 0;
  bool counting_ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const BPEReport& rep = reports[i];
    if (rep.min_pe_bound == 0 || !rep.bpe) continue;  // bound only binds in d = 2
    ++counting_checked;
    if (rep.pe_edge_count < min_pe_edges_2d(vertex_counts[i], edge_counts[i]))
      counting_ok = false;
    if (!rep.structural.counting_rule_holds) counting_ok = false;
  }

  report(6, "structural lemma suite",
         tree_ok == 20 && tri_ok && cyc_ok && counting_ok && counting_checked > 0,
         "(a) tree equivalence " + std::to_string(tree_ok) +
             "/20, (b) one-PE-edge cycles: triangle-2D " +
             std::string(tri_ok ? "ok" : "FAIL") + ", 4-cycle-3D " +
             std::string(cyc_ok ? "ok" : "FAIL") + " (incl. Remark-1 Pi-not-PE), (c) " +
             "counting bound on " + std::to_string(counting_checked) +
             " BPE-positive 2-D instances: " + (counting_ok ? "ok" : "FAIL"));
}

// --- criterion 7: algebraic identity battery ----------------------------------

void criterion_7() {
  Rng rng(1234);
  const int cases = 1000;
  int idempotent = 0, incidence_ok = 0, nullspace_ok = 0, invariance_ok = 0,
      stacking_ok = 0;

  for (int i = 0; i < cases; ++i) {
    // projector idempotence and trace
    {
      const int d = rng.uniform_int(2, 4);
      Eigen::VectorXd y = bfc_test::random_unit(rng, d);
      Eigen::MatrixXd pi = projector(y);
      if ((pi * pi - pi).norm() <= 1e-12 && std::abs(pi.trace() - (d - 1)) <= 1e-12)
        ++idempotent;
    }
    // H 1 = 0 and rank(H) = n-1 on connected graphs
    {
      const int n = rng.uniform_int(2, 8);
      OrientedGraph g = bfc_test::random_connected_graph(rng, n, rng.uniform_int(0, 4));
      IncidenceMatrix inc = incidence_matrix(g);
      if ((inc.H * Eigen::VectorXd::Ones(n)).norm() == 0.0 &&
          numerical_rank(inc.H) == n - 1)
        ++incidence_ok;
    }
    // L_B annihilates U and p; orientation/translation/scale invariance
    {
      const int n = rng.uniform_int(2, 5);
      const int d = rng.uniform_int(2, 3);
      OrientedGraph g = bfc_test::random_connected_graph(rng, n, rng.uniform_int(0, 2));
      Configuration cfg(d, bfc_test::separated_positions(rng, n, d));
      IncidenceMatrix inc = incidence_matrix(g, d);
      Eigen::MatrixXd lb = bearing_laplacian(cfg, inc);
      Eigen::VectorXd w = rng.uniform_vector(d, -3, 3);
      if ((lb * (translation_basis(n, d) * w)).norm() < 1e-10 &&
          (lb * cfg.p).norm() < 1e-10)
        ++nullspace_ok;

      const int k = rng.uniform_int(0, g.edge_count() - 1);
      Eigen::MatrixXd lb_flip =
          bearing_laplacian(cfg, incidence_matrix(g.with_flipped_edge(k), d));
      const double c = rng.uniform(0.3, 3.0);
      Eigen::VectorXd t = rng.uniform_vector(d, -5, 5);
      Configuration moved(d, c * cfg.p + translation_basis(n, d) * t);
      Eigen::MatrixXd lb_moved = bearing_laplacian(moved, incidence_matrix(g, d));
      if ((lb - lb_flip).norm() < 1e-12 && (lb - lb_moved).norm() < 1e-9)
        ++invariance_ok;
    }
    // distributed stacking equals v* - k_p L_B p_tilde
    {
      const int n = rng.uniform_int(2, 5);
      const int d = rng.uniform_int(2, 3);
      OrientedGraph g = bfc_test::random_connected_graph(rng, n, rng.uniform_int(0, 2));
      DesiredMotion motion;
      motion.d = d;
      motion.p0 = bfc_test::separated_positions(rng, n, d);
      SimilarityPath path;
      path.rotation = {0, 1, rng.uniform(-1.0, 1.0)};
      path.drift = rng.uniform_vector(d, -1, 1);
      path.center = Eigen::VectorXd::Zero(d);
      motion.path = path;
      ControlParams params{rng.uniform(0.2, 2.0)};
      Eigen::VectorXd p = bfc_test::separated_positions(rng, n, d);
      const double t = rng.uniform(0.0, 10.0);
      Eigen::VectorXd stacked = closed_loop_rhs(p, t, motion, g, params);
      MotionSample s = eval(motion, t);
      Eigen::MatrixXd lb = bearing_laplacian(Configuration(d, p), incidence_matrix(g, d));
      Eigen::VectorXd central = s.v_star - params.k_p * (lb * (p - s.p_star));
      if ((stacked - central).norm() <= 1e-12 * std::max(1.0, central.norm()))
        ++stacking_ok;
    }
  }

  const bool pass = idempotent == cases && incidence_ok == cases &&
                    nullspace_ok == cases && invariance_ok == cases &&
                    stacking_ok == cases;
  report(7, "algebraic identities (1000 cases each)", pass,
         "projector " + std::to_string(idempotent) + ", incidence " +
             std::to_string(incidence_ok) + ", L_B null space " +
             std::to_string(nullspace_ok) + ", invariances " +
             std::to_string(invariance_ok) + ", control stacking " +
             std::to_string(stacking_ok) + " of 1000");
}

}  // namespace

int main() {
  Scenario square = load_scenario_file(bfc_test::scenario_path("square2d.scn"));
  Scenario pyramid = load_scenario_file(bfc_test::scenario_path("pyramid3d.scn"));

  SimLog square_log = criterion_1(square);
  SimLog pyramid_log = criterion_2(pyramid);
  criterion_3(square_log, pyramid_log);
  criterion_4(square);
  criterion_5();
  criterion_6();
  criterion_7();
  std::printf(
      "[NOTE] criterion 8: the exponential-rate constants of the stability theorem "
      "are not computable from the source material; acceptance substitutes the "
      "empirical decay fits in criteria 1-2 (per the stated acceptance terms).\n");

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
