// Serial reference vs OpenMP kernels. Usage: bench_kernels [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "muso/cube.hpp"
#include "muso/enumerate.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/plcp.hpp"
#include "muso/random_facet.hpp"
#include "muso/realizability.hpp"

using namespace muso;

static int repeats = 3;

static double best_of(const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

static void row(const char* name, const std::function<void()>& serial, const std::function<void()>& parallel) {
  const double ts = best_of(serial);
  const double tp = best_of(parallel);
  std::printf("%-28s %10.4f %10.4f %8.2fx\n", name, ts, tp, ts / tp);
}

// chain closure on n dimensions, as a branching
static Branching chain(int n) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i - 1;
  return Branching(parent);
}

int main(int argc, char** argv) {
  if (argc > 1) repeats = std::max(1, std::atoi(argv[1]));
  std::printf("threads %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  volatile bool sink_flag = false;
  const Orientation big = build_matousek(family_graph("path", 16, 1));
  row(
      "is_uso n=16", [&] { sink_flag = serial::is_uso(big); }, [&] { sink_flag = is_uso(big); });

  const CyclicExtension ext_big = synthesize_extension(chain(14));
  row(
      "extension_to_uso n=14", [&] { serial::extension_to_uso(ext_big); }, [&] { extension_to_uso(ext_big); });

  const CyclicExtension ext_small = synthesize_extension(chain(10));
  const PLCPInstance inst = translate_to_plcp(realization_matrix(ext_small), ext_small);
  row(
      "plcp_to_uso n=10", [&] { serial::plcp_to_uso(inst); }, [&] { plcp_to_uso(inst); });

  const Orientation rf = build_matousek(family_graph("broken-chain", 16, 1));
  row(
      "run_trials_on n=16 x20000", [&] { serial::run_trials_on(rf, "broken-chain", 20000, 1); },
      [&] { run_trials_on(rf, "broken-chain", 20000, 1); });
  return 0;
}
