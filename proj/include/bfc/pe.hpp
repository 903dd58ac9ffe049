#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bfc/graph.hpp"
#include "bfc/trajectory.hpp"

namespace bfc {

struct PEOptions {
  /// Excitation level below which a verdict is "not PE": separates numerical
  /// noise from genuine excitation.
  double mu_floor = 1e-6;
  double eps_min = kDefaultEpsMin;
};

struct WindowMinimum {
  double t_start;
  double min_eig;
};

/// Outcome of a sliding-window PE scan: window length T, certified excitation
/// level mu = min over scanned windows of the window integral's smallest
/// (possibly generalized) eigenvalue, and the per-window trace.
struct PEWitness {
  double T = 0.0;
  double mu = 0.0;
  std::vector<WindowMinimum> window_minima;
  bool pe = false;  // mu > mu_floor
};

/// PE test for a sampled PSD matrix trajectory Σ(t): scans every window
/// [t, t+T] on the grid (stride dt), integrating by composite trapezoid and
/// recording the minimum eigenvalue. Requires dt ≤ T/50 and a horizon of at
/// least 2T (else HorizonTooShort).
PEWitness is_pe_matrix(const std::vector<Eigen::MatrixXd>& sigma, double dt, double T,
                       const PEOptions& opts = {});

/// PE test for a sampled unit-direction trajectory: delegates to is_pe_matrix
/// on π_{y(t)}.
PEWitness is_pe_direction(const std::vector<Eigen::VectorXd>& y, double dt, double T,
                          const PEOptions& opts = {});

/// Derivative criterion: true iff ‖ẏ‖ stays at or above eps at every sample
/// of every window (equivalently, over the whole scanned horizon). Cross-check
/// for is_pe_direction. A coarse uniform-continuity guard rejects ẏ samples
/// with jumps larger than 0.5 between neighbours.
bool pe_by_derivative(const std::vector<Eigen::VectorXd>& y_dot, double dt, double T,
                      double eps);

/// Relative PE test for the desired bearing Laplacian: certifies
/// ∫_t^{t+T} L_B*(τ)dτ ≥ μ L on range(L). The window integral M is projected
/// onto an orthonormal basis V of the orthogonal complement of Span{U}
/// (= range(L) for connected graphs), where the pencil (VᵀMV, VᵀLV) is
/// definite and the smallest generalized eigenvalue is the relative level.
/// Throws DisconnectedGraph when the graph has no spanning tree.
PEWitness is_pe_bearing_laplacian(const DesiredMotion& motion, const OrientedGraph& g,
                                  double T, double horizon, double dt,
                                  const PEOptions& opts = {});

struct RankSample {
  double t;
  int rank;
};

/// Consistency of the numeric verdicts with the structural lemmas.
struct StructuralChecks {
  bool acyclic_rule_applies = false;  // graph acyclic with spanning tree
  bool acyclic_rule_holds = true;     // BPE ⇔ every edge bearing PE
  bool rigidity_rule_applies = false; // rank(L_B(t)) maximal ∀t and ≥1 PE edge
  bool rigidity_rule_holds = true;    // ... implies BPE
  bool counting_rule_applies = false; // d = 2 and verdict BPE
  bool counting_rule_holds = true;    // #PE edges ≥ 2-D lower bound
  bool consistent() const;
  std::string summary() const;
};

/// Full bearing-PE analysis of a desired formation.
struct BPEReport {
  bool spanning_tree = false;
  bool acyclic = false;
  bool bpe = false;  // spanning tree and relative witness PE
  PEWitness witness;
  std::vector<PEWitness> per_edge;
  std::vector<RankSample> rank_trace;
  int max_rank = 0;  // dn − d − 1
  bool rank_always_maximal = false;
  int pe_edge_count = 0;
  int min_pe_bound = 0;  // meaningful when d == 2
  StructuralChecks structural;
};

BPEReport is_bpe(const DesiredMotion& motion, const OrientedGraph& g, double T,
                 double horizon, double dt, const PEOptions& opts = {});

/// Lower bound on the number of PE bearing vectors a BPE formation in R²
/// must have: 1 when m ≥ 2n−3, else j+1 with j = 2n−3−m. Throws InvalidCount
/// when m < n−1 (no spanning tree possible).
int min_pe_edges_2d(int n, int m);

}  // namespace bfc
