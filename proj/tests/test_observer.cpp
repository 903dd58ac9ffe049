#include <doctest.h>

#include <cmath>

#include "bfc/linalg.hpp"
#include "bfc/observer.hpp"
#include "bfc/pe.hpp"
#include "bfc/random.hpp"
#include "test_support.hpp"

using namespace bfc;

TEST_CASE("observer rhs: null directions of L_B are blind spots") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  IncidenceMatrix inc = incidence_matrix(g, 2);
  MotionSample s = eval(m, 0.7);
  Eigen::MatrixXd lb = bearing_laplacian(Configuration(2, s.p_star), inc);

  // perfect estimate: derivative equals the true velocity, error frozen at 0
  CHECK((observer_rhs(s.p_star, s.v_star, lb) - s.v_star).norm() < 1e-10);

  // translated estimate: offset is invisible, persists forever
  Eigen::VectorXd w(2);
  w << 3.0, -1.5;
  Eigen::VectorXd shifted = s.p_star + translation_basis(4, 2) * w;
  CHECK((observer_rhs(shifted, s.v_star, lb) - s.v_star).norm() < 1e-10);
}

TEST_CASE("non-BPE pair: the estimate error need not converge") {
  // two static agents: constant bearing g, so ζ components along (g, -g)
  // sit in Null(L_B) and never decay
  DesiredMotion m;
  m.d = 2;
  m.p0.resize(4);
  m.p0 << 0, 0, 1, 0;
  SimilarityPath path;
  path.drift = Eigen::Vector2d::Zero();
  path.center = Eigen::Vector2d::Zero();
  m.path = path;
  OrientedGraph g(2, {{0, 1}});

  Eigen::VectorXd ghat(4);
  ghat << 1, 0, -1, 0;  // (g, -g): zero-centroid, in the blind spot
  ObserverLog log = run_observer(m, g, m.p0 + ghat, 20.0, 0.01);
  CHECK(log.zeta_norm.front() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(log.zeta_norm.back() > 0.9 * log.zeta_norm.front());
}

TEST_CASE("BPE true motion: seeded estimates converge to the offset formula") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  for (std::uint64_t seed : {7ULL, 8ULL}) {
    Eigen::VectorXd p_hat0 = default_observer_init(8, seed);
    ObserverLog log = run_observer(m, g, p_hat0, 100.0, 0.01);
    CHECK(log.zeta_norm.back() < 1e-3);
    CHECK((log.final_offset - log.expected_offset).norm() < 1e-3);
    for (double uz : log.u_zeta_norm) CHECK(uz < 1e-8);
  }
}

TEST_CASE("perfect initialization keeps zeta identically zero") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  ObserverLog log = run_observer(m, g, eval(m, 0.0).p_star, 30.0, 0.01);
  for (double z : log.zeta_norm) CHECK(z < 1e-10);
}

TEST_CASE("pure translation offsets persist exactly") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  Eigen::VectorXd w(2);
  w << 5, -3;
  Eigen::VectorXd p_hat0 = eval(m, 0.0).p_star + translation_basis(4, 2) * w;
  ObserverLog log = run_observer(m, g, p_hat0, 30.0, 0.01);
  for (std::size_t i = 0; i < log.times.size(); ++i) {
    Eigen::VectorXd expected = translation_basis(4, 2) * w;
    CHECK((log.estimate_error[i] - expected).norm() < 1e-9);
  }
}

TEST_CASE("zeta decays exponentially under a BPE true motion") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  ObserverLog log = run_observer(m, g, default_observer_init(8, 3), 80.0, 0.01);
  bfc_test::LinearFit fit = bfc_test::decay_fit(log.times, log.zeta_norm, 5.0, 80.0);
  CHECK(fit.slope < -0.01);
  CHECK(fit.r2 >= 0.95);
}

TEST_CASE("halving dt moves the final error by less than 5%") {
  DesiredMotion m = bfc_test::square2d_motion();
  OrientedGraph g = bfc_test::square2d_graph();
  Eigen::VectorXd p_hat0 = default_observer_init(8, 5);
  const double z1 = run_observer(m, g, p_hat0, 40.0, 0.02).zeta_norm.back();
  const double z2 = run_observer(m, g, p_hat0, 40.0, 0.01).zeta_norm.back();
  CHECK(std::abs(z1 - z2) / z2 < 0.05);
}

TEST_CASE("default initialization is reproducible and bounded") {
  Eigen::VectorXd a = default_observer_init(8, 42);
  Eigen::VectorXd b = default_observer_init(8, 42);
  CHECK((a - b).norm() == 0.0);
  CHECK(a.cwiseAbs().maxCoeff() <= 2.0);
  CHECK((a - default_observer_init(8, 43)).norm() > 0.0);
}
