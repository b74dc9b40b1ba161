#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "muso/enumerate.hpp"
#include "muso/matroid.hpp"
#include "muso/plcp.hpp"
#include "muso/random_facet.hpp"
#include "oracles.hpp"

namespace muso {
namespace {

// The OpenMP kernels must agree exactly with their serial references,
// whatever the thread count.
class SerialParallel : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(SerialParallel, IsUso) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const Orientation o = trial % 2 ? oracle::random_orientation(n, rng)
                                    : build_matousek(oracle::random_dag(n, 0.5, rng));
    ASSERT_EQ(is_uso(o), serial::is_uso(o));
  }
  const Orientation big = build_matousek(family_graph("random", 12, 1));
  EXPECT_TRUE(is_uso(big));
  EXPECT_TRUE(serial::is_uso(big));
}

TEST_P(SerialParallel, ExtensionToUso) {
  for (const auto& b : all_branchings(4)) {
    const CyclicExtension ext = synthesize_extension(b);
    for (int p = 0; p <= 8; p += 2) {
      ASSERT_EQ(extension_to_uso(ext.with_q_at(p)), serial::extension_to_uso(ext.with_q_at(p)));
    }
  }
  const CyclicExtension wide = synthesize_extension(Branching({-1, 0, 0, 1, -1, 4, 5, 5, 2, 8, -1}));
  EXPECT_EQ(extension_to_uso(wide), serial::extension_to_uso(wide));
}

TEST_P(SerialParallel, PlcpToUso) {
  for (const auto& b : all_branchings(3)) {
    const CyclicExtension ext = synthesize_extension(b);
    const PLCPInstance inst = translate_to_plcp(realization_matrix(ext), ext);
    ASSERT_EQ(plcp_to_uso(inst), serial::plcp_to_uso(inst));
  }
}

TEST_P(SerialParallel, RunTrials) {
  for (const std::string family : {"path", "broken-chain", "random"}) {
    const Orientation o = build_matousek(family_graph(family, 9, 3));
    const TrialStats a = run_trials_on(o, family, 500, 77);
    const TrialStats b = serial::run_trials_on(o, family, 500, 77);
    EXPECT_EQ(to_csv(std::vector{a}), to_csv(std::vector{b}));
    EXPECT_EQ(a.correct, b.correct);
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, SerialParallel, ::testing::Values(1, 2, 4));

}  // namespace
}  // namespace muso
