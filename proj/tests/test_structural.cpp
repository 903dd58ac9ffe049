// Structural BPE lemma suite: the acyclic all-edges equivalence, the
// maximal-rank one-PE-edge sufficiency, and the 2-D counting bound, exercised
// on randomized trees and the constructed cycle instances.

#include <doctest.h>

#include "bfc/pe.hpp"
#include "bfc/random.hpp"
#include "test_support.hpp"

using namespace bfc;
using bfc_test::TreeMotionKind;

namespace {

BPEReport analyze_tree(const bfc_test::TreeInstance& inst) {
  return is_bpe(inst.motion, inst.graph, 12.0, 36.0, 0.1);
}

}  // namespace

TEST_CASE("acyclic equivalence: BPE <=> every edge PE on random trees") {
  Rng rng(71);
  int bpe_true = 0, bpe_false = 0;
  for (int iter = 0; iter < 20; ++iter) {
    const int n = rng.uniform_int(2, 6);
    const int d = rng.uniform_int(2, 3);
    const TreeMotionKind kind = static_cast<TreeMotionKind>(iter % 3);
    bfc_test::TreeInstance inst = bfc_test::random_tree_instance(rng, n, d, kind);
    BPEReport rep = analyze_tree(inst);

    CHECK(rep.acyclic);
    bool all_pe = rep.pe_edge_count == inst.graph.edge_count();
    CHECK(rep.bpe == all_pe);
    CHECK(rep.structural.acyclic_rule_applies);
    CHECK(rep.structural.acyclic_rule_holds);

    // construction knowledge: rotation excites everything, static nothing,
    // a leaf orbit exactly one edge
    if (kind == TreeMotionKind::AllRotating) {
      CHECK(rep.pe_edge_count == inst.graph.edge_count());
      CHECK(rep.bpe);
    } else if (kind == TreeMotionKind::Static) {
      CHECK(rep.pe_edge_count == 0);
      CHECK_FALSE(rep.bpe);
    } else {
      CHECK(rep.pe_edge_count == 1);
      CHECK(rep.bpe == (inst.graph.edge_count() == 1));
    }
    (rep.bpe ? bpe_true : bpe_false)++;
  }
  CHECK(bpe_true >= 5);
  CHECK(bpe_false >= 5);
}

TEST_CASE("rigid-to-persistent: one PE edge at maximal rank certifies BPE") {
  // triangle (3-cycle) in R^2
  BPEReport tri = is_bpe(bfc_test::triangle_one_pe_motion(), bfc_test::triangle_graph(),
                         12.0, 48.0, 0.05);
  CHECK(tri.rank_always_maximal);
  CHECK(tri.max_rank == 3);
  CHECK(tri.pe_edge_count == 1);
  CHECK(tri.bpe);
  CHECK(tri.structural.rigidity_rule_applies);
  CHECK(tri.structural.rigidity_rule_holds);
  CHECK_FALSE(tri.acyclic);

  // 4-cycle in R^3
  BPEReport cyc = is_bpe(bfc_test::cycle3d_one_pe_motion(), bfc_test::cycle4_graph(),
                         12.0, 48.0, 0.05);
  CHECK(cyc.rank_always_maximal);
  CHECK(cyc.max_rank == 8);
  CHECK(cyc.pe_edge_count == 1);
  CHECK(cyc.bpe);
  CHECK(cyc.structural.rigidity_rule_holds);
}

TEST_CASE("counting bound holds on every 2-D BPE-positive verdict") {
  Rng rng(73);
  int checked = 0;
  // random trees in d = 2 with full rotation (BPE) and the triangle instance
  for (int iter = 0; iter < 6; ++iter) {
    const int n = rng.uniform_int(2, 6);
    bfc_test::TreeInstance inst =
        bfc_test::random_tree_instance(rng, n, 2, TreeMotionKind::AllRotating);
    BPEReport rep = analyze_tree(inst);
    REQUIRE(rep.bpe);
    CHECK(rep.min_pe_bound == min_pe_edges_2d(n, inst.graph.edge_count()));
    CHECK(rep.pe_edge_count >= rep.min_pe_bound);
    CHECK(rep.structural.counting_rule_applies);
    CHECK(rep.structural.counting_rule_holds);
    ++checked;
  }
  BPEReport tri = is_bpe(bfc_test::triangle_one_pe_motion(), bfc_test::triangle_graph(),
                         12.0, 48.0, 0.05);
  REQUIRE(tri.bpe);
  CHECK(tri.min_pe_bound == 1);  // triangle: m = 3 = 2n-3
  CHECK(tri.pe_edge_count >= tri.min_pe_bound);
  CHECK(tri.structural.counting_rule_holds);
  ++checked;
  CHECK(checked == 7);
}

TEST_CASE("square scenario: tree topology needs all edges PE and has them") {
  BPEReport rep = is_bpe(bfc_test::square2d_motion(), bfc_test::square2d_graph(), 12.0,
                         48.0, 0.05);
  CHECK(rep.bpe);
  CHECK(rep.acyclic);
  CHECK(rep.pe_edge_count == 3);
  CHECK(rep.min_pe_bound == 3);  // tree in 2-D: every edge must be PE
  CHECK(rep.structural.consistent());
  // square on a 3-edge tree is never infinitesimally bearing rigid
  CHECK_FALSE(rep.rank_always_maximal);
}

TEST_CASE("pyramid scenario: complete graph, all bearings PE, maximal rank") {
  BPEReport rep = is_bpe(bfc_test::pyramid3d_motion(), bfc_test::complete_graph(4), 12.0,
                         48.0, 0.05);
  CHECK(rep.bpe);
  CHECK_FALSE(rep.acyclic);
  CHECK(rep.pe_edge_count == 6);
  CHECK(rep.rank_always_maximal);
  CHECK(rep.max_rank == 8);
  CHECK(rep.structural.consistent());
}

TEST_CASE("structural summary renders one line per rule") {
  BPEReport rep = is_bpe(bfc_test::square2d_motion(), bfc_test::square2d_graph(), 12.0,
                         48.0, 0.05);
  const std::string text = rep.structural.summary();
  CHECK(text.find("acyclic equivalence") != std::string::npos);
  CHECK(text.find("maximal-rank implication") != std::string::npos);
  CHECK(text.find("counting bound") != std::string::npos);
  CHECK(text.find("VIOLATED") == std::string::npos);
}
