#include <doctest.h>

#include <cmath>

#include "bfc/errors.hpp"
#include "bfc/linalg.hpp"
#include "bfc/scenario.hpp"
#include "bfc/scenario_file.hpp"
#include "test_support.hpp"

using namespace bfc;

namespace {

Scenario bundled_square() {
  return load_scenario_file(bfc_test::scenario_path("square2d.scn"));
}

}  // namespace

TEST_CASE("identical scenarios produce bit-identical logs") {
  Scenario s = bundled_square();
  s.horizon = 20.0;
  SimLog a = run_scenario(s);
  SimLog b = run_scenario(s);
  REQUIRE(a.times.size() == b.times.size());
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    CHECK(a.times[i] == b.times[i]);
    CHECK((a.states[i] - b.states[i]).norm() == 0.0);
    CHECK(a.p_tilde_norm[i] == b.p_tilde_norm[i]);
  }
}

TEST_CASE("zero horizon logs only the initial sample") {
  Scenario s = bundled_square();
  s.horizon = 0.0;
  s.window_T = 0.0;
  SimLog log = run_scenario(s);
  CHECK(log.times.size() == 1);
  CHECK((log.states[0] - s.p0).norm() == 0.0);
  CHECK_FALSE(log.aborted);
}

TEST_CASE("sample count is horizon/dt + 1 on exact grids") {
  Scenario s = bundled_square();
  s.horizon = 30.0;
  SimLog log = run_scenario(s);
  CHECK(log.times.size() == 3001);
  CHECK(log.times.back() == doctest::Approx(30.0).epsilon(1e-12));
  for (std::size_t i = 0; i + 1 < log.times.size(); ++i)
    CHECK(log.times[i] < log.times[i + 1]);
}

TEST_CASE("halving dt changes the final error by less than 5%") {
  Scenario s = bundled_square();
  s.horizon = 30.0;
  s.dt = 0.02;
  const double e1 = run_scenario(s).p_tilde_norm.back();
  s.dt = 0.01;
  const double e2 = run_scenario(s).p_tilde_norm.back();
  CHECK(std::abs(e1 - e2) / e2 < 0.05);
}

TEST_CASE("disconnected interaction graphs are refused") {
  Scenario s = bundled_square();
  s.graph = OrientedGraph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(run_scenario(s), DisconnectedGraph);
}

TEST_CASE("coincident initial neighbours violate Assumption 3") {
  Scenario s = bundled_square();
  s.p0.segment(2, 2) = s.p0.segment(0, 2);  // agent 2 on top of agent 1 (an edge)
  CHECK_THROWS_AS(run_scenario(s), CoincidentAgents);
}

TEST_CASE("collision guard aborts mid-run and keeps the partial log") {
  // raise the separation floor above the desired edge length sqrt(2): the
  // converging formation must cross it
  Scenario s = bundled_square();
  s.eps_min = 2.0;  // initial edge lengths are 2.24, 4.12, 2.24
  s.window_T = 0.0;
  SimLog log = run_scenario(s);
  CHECK(log.aborted);
  CHECK(log.abort_time > 0.0);
  CHECK(log.abort_time < 100.0);
  CHECK_FALSE(log.times.empty());
  CHECK(log.times.back() <= log.abort_time);
  for (double dist : log.min_edge_dist) CHECK(dist > s.eps_min);
  CHECK_FALSE(log.abort_reason.empty());
}

TEST_CASE("scenario invariants are validated") {
  Scenario s = bundled_square();
  s.dt = -0.1;
  CHECK_THROWS_AS(s.validate(), Error);

  s = bundled_square();
  s.control.k_p = 0.0;
  CHECK_THROWS_AS(s.validate(), Error);

  s = bundled_square();
  s.dt = 0.3;  // violates dt <= min(0.05, T/50) with T declared
  CHECK_THROWS_AS(s.validate(), Error);

  s = bundled_square();
  s.p0(0) += 0.5;  // breaks the declared zero-centroid condition
  CHECK_THROWS_AS(s.validate(), Error);

  s = bundled_square();
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("pe_window picks declared, periodic, or horizon/4 defaults") {
  Scenario s = bundled_square();
  CHECK(s.pe_window() == 12.0);  // declared in the file
  s.window_T = 0.0;
  CHECK(s.pe_window() == doctest::Approx(12.0));  // rotation period 2*pi/omega
  std::get<SimilarityPath>(s.motion.path).rotation.omega = 0.0;
  CHECK(s.pe_window() == doctest::Approx(s.horizon / 4.0));
}

TEST_CASE("bundled square scenario asserts the zero-centroid condition") {
  Scenario s = bundled_square();
  CHECK(s.require_zero_centroid_error);
  Eigen::MatrixXd u = translation_basis(4, 2);
  Eigen::VectorXd pt0 = s.p0 - eval(s.motion, 0.0).p_star;
  CHECK((u.transpose() * pt0).norm() < 1e-12);
}

TEST_CASE("min edge distance is tracked and positive on clean runs") {
  Scenario s = bundled_square();
  s.horizon = 20.0;
  SimLog log = run_scenario(s);
  for (double dist : log.min_edge_dist) CHECK(dist > s.eps_min);
  CHECK_FALSE(log.aborted);
}
