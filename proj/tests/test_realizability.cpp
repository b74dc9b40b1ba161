#include <gtest/gtest.h>

#include "helpers.hpp"
#include "muso/enumerate.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/realizability.hpp"
#include "oracles.hpp"

namespace muso {
namespace {

using test::dims;
using test::graph;

TEST(FindForbidden, LoopsOnlyIsClean) { EXPECT_FALSE(find_forbidden(InfluenceGraph(4)).has_value()); }

TEST(FindForbidden, PathWithoutShortcutIsG1) {
  const auto w = find_forbidden(graph(3, {{1, 2}, {2, 3}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (ForbiddenWitness{ForbiddenKind::G1, {0, 1, 2}}));
  EXPECT_EQ(describe(*w), "G1 at 1,2,3");
}

TEST(FindForbidden, TwoIncomparableParentsIsG2) {
  const auto w = find_forbidden(graph(3, {{1, 3}, {2, 3}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (ForbiddenWitness{ForbiddenKind::G2, {2, 0, 1}}));
}

TEST(FindForbidden, PrefersG1AndSmallestTriple) {
  // Transitive, so no G1; 3 has incomparable parents 1 and 2.
  const auto w = find_forbidden(graph(4, {{1, 3}, {2, 3}, {3, 4}, {2, 4}, {1, 4}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, ForbiddenKind::G2);
  const auto w1 = find_forbidden(graph(4, {{1, 3}, {2, 3}, {3, 4}}));
  ASSERT_TRUE(w1.has_value());
  EXPECT_EQ(*w1, (ForbiddenWitness{ForbiddenKind::G1, {0, 2, 3}}));
}

TEST(FindForbidden, AgreesWithInducedSubgraphOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_dags(n)) {
      const auto w = find_forbidden(g);
      ASSERT_EQ(w.has_value(), oracle::has_forbidden_induced(g));
      if (!w) continue;
      const auto [x, y, z] = w->vertices;
      if (w->kind == ForbiddenKind::G1) {
        EXPECT_TRUE(g.has_edge(x, y) && g.has_edge(y, z) && !g.has_edge(x, z));
      } else {
        EXPECT_TRUE(g.has_edge(y, x) && g.has_edge(z, x) && !g.has_edge(y, z) && !g.has_edge(z, y));
      }
    }
  }
}

TEST(IsBranchingClosure, Examples) {
  const auto roots = is_branching_closure(InfluenceGraph(3));
  ASSERT_TRUE(roots.has_value());
  EXPECT_EQ(roots->children(-1), (std::vector<int>{0, 1, 2}));

  const auto chain = is_branching_closure(graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->parents(), (std::vector<int>{-1, 0, 1}));

  EXPECT_FALSE(is_branching_closure(graph(3, {{1, 2}, {2, 3}})).has_value());
  EXPECT_FALSE(is_branching_closure(graph(3, {{1, 3}, {2, 3}})).has_value());
}

TEST(IsBranchingClosure, ClosureOfResultIsInput) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_dags(n)) {
      const auto b = is_branching_closure(g);
      ASSERT_EQ(b.has_value(), !find_forbidden(g).has_value());
      if (b) ASSERT_EQ(b->closure(), g);
    }
  }
}

TEST(IsBranchingClosure, RecoversEveryBranching) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : all_branchings(n)) {
      const auto back = is_branching_closure(b.closure());
      ASSERT_TRUE(back.has_value());
      ASSERT_EQ(*back, b);
    }
  }
}

TEST(Branching, RejectsCycles) {
  EXPECT_THROW(Branching({1, 0}), std::invalid_argument);
  EXPECT_THROW(Branching({0}), std::invalid_argument);
}

TEST(HoltKlee, UniformCubeHasThreeDisjointPaths) {
  EXPECT_TRUE(holt_klee_3face(Orientation::uniform(3), Face(0, full_set(3))));
}

TEST(HoltKlee, ForbiddenGraphsFail) {
  EXPECT_FALSE(holt_klee_3face(build_matousek(graph(3, {{1, 2}, {2, 3}})), Face(0, full_set(3))));
  EXPECT_FALSE(holt_klee_3face(build_matousek(graph(3, {{1, 3}, {2, 3}})), Face(0, full_set(3))));
}

TEST(HoltKlee, RejectsBadFaces) {
  EXPECT_THROW(holt_klee_3face(Orientation::uniform(3), Face(0, dims({1, 2}))), std::invalid_argument);
  // Cyclic pattern 1 <-> 2: sinks at the empty set and at {1,2}.
  const Orientation two_sinks = build_from_flip_rule(graph(3, {{1, 2}, {2, 1}}));
  EXPECT_THROW(holt_klee_3face(two_sinks, Face(0, full_set(3))), std::invalid_argument);
}

TEST(HoltKlee, NonRealizableWitnessFaceFails) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : all_dags(n)) {
      const auto w = find_forbidden(g);
      if (!w) continue;
      const Subset span = bit(w->vertices[0]) | bit(w->vertices[1]) | bit(w->vertices[2]);
      ASSERT_FALSE(holt_klee_3face(build_matousek(g), Face(0, span))) << describe(*w);
    }
  }
}

TEST(HoltKlee, RealizableCubesPassEveryThreeFace) {
  for (const auto& b : all_branchings(4)) {
    const Orientation o = build_matousek(b.closure());
    for (Subset span = 0; span < 16; ++span) {
      if (cardinality(span) != 3) continue;
      for (Subset fixed = 0; fixed < 16; ++fixed) {
        if (fixed & span) continue;
        ASSERT_TRUE(holt_klee_3face(o, Face(fixed, span)));
      }
    }
  }
}

TEST(SynthesizeExtension, SingleDimension) {
  const CyclicExtension ext = synthesize_extension(Branching({-1}));
  EXPECT_EQ(std::vector<Element>(ext.order().begin(), ext.order().end()), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(ext.flipped(), element_bit(1));
  EXPECT_TRUE(validate_conditions(ext));
}

TEST(SynthesizeExtension, TwoRoots) {
  const CyclicExtension ext = synthesize_extension(Branching({-1, -1}));
  // 1, 1bar, 2, 2bar, q with ids 0, 2, 1, 3, 4.
  EXPECT_EQ(std::vector<Element>(ext.order().begin(), ext.order().end()), (std::vector<Element>{0, 2, 1, 3, 4}));
  EXPECT_EQ(ext.flipped(), element_bit(2) | element_bit(3));
  EXPECT_TRUE(validate_conditions(ext));
}

TEST(SynthesizeExtension, NestedPair) {
  const CyclicExtension ext = synthesize_extension(Branching({-1, 0}));
  // 1, 2, 2bar, 1bar: gap of pair 1 is 3 (parity odd), of pair 2 is 1.
  EXPECT_EQ(std::vector<Element>(ext.order().begin(), ext.order().end()), (std::vector<Element>{0, 1, 3, 2, 4}));
  EXPECT_EQ(ext.flipped(), element_bit(3));
  EXPECT_TRUE(validate_conditions(ext));
}

TEST(SynthesizeExtension, AlwaysValidWithQLast) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : all_branchings(n)) {
      const CyclicExtension ext = synthesize_extension(b);
      ASSERT_TRUE(validate_conditions(ext));
      ASSERT_EQ(ext.position(ext.q()), 2 * n);
      ASSERT_EQ(g_pi(ext), b.closure());
    }
  }
}

}  // namespace
}  // namespace muso
