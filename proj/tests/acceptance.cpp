// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "muso/cube.hpp"
#include "muso/enumerate.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/plcp.hpp"
#include "muso/random_facet.hpp"
#include "muso/realizability.hpp"
#include "oracles.hpp"

using namespace muso;

namespace {

// Pinned limits.
constexpr double kBuildSeconds = 30.0;
constexpr double kMatroidSeconds = 60.0;
constexpr double kPipelineSeconds = 60.0;
// Quadratic envelope for the path family, see docs/calibration.md.
constexpr double kEnvelopeC = 0.5;
constexpr double kGapSlack = 2.0;
constexpr std::uint64_t kSeed = 20240917;
constexpr std::uint64_t kTrials = 10000;

int failures = 0;

struct Outcome {
  bool ok;
  std::string detail;
};

void report(const char* id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.ok) ++failures;
  std::printf("%s %-3s %-34s %s (%.1f s)\n", r.ok ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome uso_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  long checked = 0, bad = 0;
  std::vector<long> counts;
  for (int n = 4; n <= 5; ++n) {
    const auto dags = all_dags(n);
    counts.push_back(static_cast<long>(dags.size()));
    for (const auto& g : dags) {
      const Orientation o = build_matousek(g);
      ++checked;
      if (!is_uso(o) || !unique_sink_per_face(o)) ++bad;
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = bad == 0 && counts[0] == 543 && counts[1] == 29281 && secs < kBuildSeconds;
  return {ok, fmt("%ld+%ld DAGs, %ld failures, %.1f s of %.0f", counts[0], counts[1], bad, secs, kBuildSeconds)};
}

Outcome characterization() {
  long graphs = 0, mismatches = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : all_dags(n)) {
      ++graphs;
      const bool forbidden = find_forbidden(g).has_value();
      const bool closure = is_branching_closure(g).has_value();
      if (forbidden == closure || forbidden != oracle::has_forbidden_induced(g)) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%ld DAGs (n<=5), %ld mismatches", graphs, mismatches)};
}

Outcome p_matroid_theorem() {
  const auto t0 = std::chrono::steady_clock::now();
  long cases = 0, mismatches = 0, valid = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<Element> perm(2 * n);
    for (int i = 0; i < 2 * n; ++i) perm[i] = i;
    do {
      std::vector<Element> order = perm;
      order.push_back(2 * n);
      for (ElementSet f = 0; f < element_bit(2 * n); ++f) {
        const CyclicExtension ext(n, order, f);
        const bool v = validate_conditions(ext);
        ++cases;
        valid += v;
        if (is_p_matroid(ext) != v) ++mismatches;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < kMatroidSeconds,
          fmt("%ld cases (%ld valid), %ld mismatches, %.1f s of %.0f", cases, valid, mismatches, secs, kMatroidSeconds)};
}

Outcome triple_pipeline() {
  const auto t0 = std::chrono::steady_clock::now();
  long count = 0, bad = 0, at4 = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& b : all_branchings(n)) {
      ++count;
      if (n == 4) ++at4;
      const CyclicExtension ext = synthesize_extension(b);
      const Orientation a = canonicalize(build_matousek(g_pi(ext)));
      const Orientation m = canonicalize(extension_to_uso(ext));
      const Orientation p = canonicalize(plcp_to_uso(translate_to_plcp(realization_matrix(ext), ext)));
      if (!(a == m && m == p && g_pi(ext) == b.closure())) ++bad;
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && at4 == 125 && secs < kPipelineSeconds,
          fmt("%ld branchings (%ld at n=4), %ld disagreements, %.1f s of %.0f", count, at4, bad, secs,
              kPipelineSeconds)};
}

Outcome p_matrix_property() {
  long instances = 0, bad = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_valid_extension(n, [&](const CyclicExtension& ext) {
      for (int p = 0; p <= 2 * n; ++p) {
        const CyclicExtension moved = ext.with_q_at(p);
        const PLCPInstance inst = translate_to_plcp(realization_matrix(moved), moved);
        ++instances;
        if (!is_p_matrix(inst.M)) ++bad;
      }
    });
  }
  return {bad == 0, fmt("%ld instances (n<=4, every q position), %ld not P", instances, bad)};
}

Outcome holt_klee() {
  const Face cube{0, full_set(3)};
  const InfluenceGraph g1 = InfluenceGraph::from_edges(3, {{0, 1}, {1, 2}});
  const InfluenceGraph g2 = InfluenceGraph::from_edges(3, {{1, 0}, {2, 0}});
  const bool g1_fails = !holt_klee_3face(build_matousek(g1), cube);
  const bool g2_fails = !holt_klee_3face(build_matousek(g2), cube);
  long realizable = 0, bad = 0;
  for (const auto& g : all_dags(3)) {
    if (find_forbidden(g)) continue;
    ++realizable;
    if (!holt_klee_3face(build_matousek(g), cube)) ++bad;
  }
  return {g1_fails && g2_fails && bad == 0,
          fmt("G1 %s, G2 %s, %ld realizable n=3 USOs with %ld failing", g1_fails ? "fails" : "passes",
              g2_fails ? "fails" : "passes", realizable, bad)};
}

Outcome q_move() {
  long moves = 0, bad = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_valid_extension(n, [&](const CyclicExtension& ext) {
      Orientation prev = extension_to_uso(ext);
      for (int p = 2 * n; p > 0; --p) {
        const CyclicExtension moved = ext.with_q_at(p - 1);
        const Element passed = moved.order()[p];
        const bool upper = passed >= n;
        const Orientation next = extension_to_uso(moved);
        ++moves;
        if (next != flip_facet(prev, upper ? passed - n : passed, upper)) ++bad;
        prev = next;
      }
    });
  }
  return {bad == 0, fmt("%ld transpositions (n<=4), %ld mismatches", moves, bad)};
}

Outcome path_flip() {
  long flips = 0, bad = 0, forests = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& b : all_branchings(n)) {
      ++forests;
      const InfluenceGraph closure = b.closure();
      for (const auto& path : root_paths(closure)) {
        ++flips;
        if (!is_branching_closure(flip_rows(closure, path))) ++bad;
      }
    }
  }
  return {bad == 0 && flips > 0, fmt("%ld root-path flips over %ld branchings (n<=5), %ld broken", flips, forests, bad)};
}

Outcome random_facet_correctness() {
  const auto families = family_names();
  const std::uint64_t per_cell = kTrials / (families.size() * 12) + 1;
  long runs = 0, wrong = 0;
  for (const auto& family : families) {
    for (int n = 1; n <= 12; ++n) {
      const Orientation o = build_matousek(family_graph(family, n, kSeed));
      const auto sinks = oracle::empty_outmaps(o);
      std::mt19937_64 starts(stream_seed(kSeed, static_cast<std::uint64_t>(n)));
      for (std::uint64_t t = 0; t < per_cell; ++t) {
        const Subset start = static_cast<Subset>(starts()) & full_set(n);
        const RfResult r = random_facet(o, start, stream_seed(kSeed + n, t));
        ++runs;
        if (sinks.size() != 1 || r.sink != sinks[0] || r.evaluations > o.vertex_count()) ++wrong;
      }
    }
  }
  const int ns[] = {4, 8, 12};
  std::string first, second;
  for (const auto& family : families) first += to_csv(run_trials(family, ns, 1000, 7));
  const int threads = omp_get_max_threads();
  omp_set_num_threads(threads > 1 ? 1 : 3);
  for (const auto& family : families) second += to_csv(run_trials(family, ns, 1000, 7));
  omp_set_num_threads(threads);
  const bool same = first == second;
  return {wrong == 0 && runs >= static_cast<long>(kTrials) && same,
          fmt("%ld runs, %ld wrong sinks; CSV %s across reruns", runs, wrong, same ? "byte-identical" : "differs")};
}

std::vector<TrialStats> path_stats;

Outcome growth_envelope() {
  const int ns[] = {4, 8, 12};
  path_stats = run_trials("path", ns, kTrials, kSeed);
  bool ok = true;
  std::string detail;
  for (const auto& s : path_stats) {
    const double bound = kEnvelopeC * s.n * s.n;
    ok = ok && s.mean <= bound && s.correct == s.trials;
    detail += fmt("n=%d %.2f<=%.0f ", s.n, s.mean, bound);
  }
  return {ok, detail + fmt("(c=%.2f)", kEnvelopeC)};
}

Outcome qualitative_gap() {
  const int ns[] = {12};
  const double path = path_stats.empty() ? run_trials("path", ns, kTrials, kSeed)[0].mean : path_stats.back().mean;
  const double broken = run_trials("broken-chain", ns, kTrials, kSeed)[0].mean;
  const double random = run_trials("random", ns, kTrials, kSeed)[0].mean;
  return {path <= kGapSlack * broken,
          fmt("n=12 path %.2f, broken-chain %.2f, random %.2f (ratio %.3f, slack %.1f)", path, broken, random,
              path / broken, kGapSlack)};
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  report("1", "USO construction soundness", uso_soundness);
  report("2", "characterization theorem", characterization);
  report("3", "P-matroid theorem", p_matroid_theorem);
  report("4", "triple pipeline agreement", triple_pipeline);
  report("5", "P-matrix property", p_matrix_property);
  report("6", "Holt-Klee on 3-faces", holt_klee);
  report("7", "q-move is a facet flip", q_move);
  report("8", "root-path flips", path_flip);
  report("9", "Random Facet correctness", random_facet_correctness);
  report("10", "Random Facet growth envelope", growth_envelope);
  report("gap", "realizable vs non-realizable", qualitative_gap);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
