#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "muso/cube.hpp"
#include "muso/matousek.hpp"

namespace muso {

struct RfResult {
  Subset sink = 0;
  /// Distinct vertices whose outmap was queried.
  std::uint64_t evaluations = 0;
  int recursion_depth = 0;

  bool operator==(const RfResult&) const = default;
};

/// Seed of the RNG stream owned by trial `index`: two rounds of splitmix64
/// over (seed, index). The stream itself is std::mt19937_64, whose output
/// sequence is fixed by the standard.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound) by rejection; platform independent.
std::uint64_t uniform_below(std::uint64_t bound, auto& engine) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

/// Recursive Random Facet from `start`: solve a random facet through the
/// current vertex, and if its sink is not a sink of the face, cross the
/// chosen dimension and solve the opposite facet. The returned vertex is
/// evaluated once more at the top level to confirm it is the sink.
/// Throws std::runtime_error on non-USO input (wrong result or call cap 4^n).
RfResult random_facet(const Orientation& o, Subset start, std::uint64_t seed);

struct TrialStats {
  std::string family;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  /// Sample standard deviation (zero for a single trial).
  double stddev = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  /// Trials whose sink matched the brute-force sink.
  std::uint64_t correct = 0;
};

/// Known families: loops, path, star (realizable); broken-chain, random (not
/// realizable for n >= 3, random with high probability).
std::vector<std::string> family_names();
/// Throws std::invalid_argument for unknown names.
InfluenceGraph family_graph(std::string_view family, int n, std::uint64_t seed);

/// `trials` Random Facet runs on one orientation, starting at the antipode of
/// the sink; trial t uses stream_seed(seed, t). OpenMP-parallel over trials.
TrialStats run_trials_on(const Orientation& o, std::string family, std::uint64_t trials, std::uint64_t seed);

std::vector<TrialStats> run_trials(std::string_view family, std::span<const int> n_list, std::uint64_t trials,
                                   std::uint64_t seed);

/// Header plus one row per entry: family,n,trials,seed,mean,stddev,min,max.
std::string to_csv(std::span<const TrialStats> stats);

namespace serial {
TrialStats run_trials_on(const Orientation& o, std::string family, std::uint64_t trials, std::uint64_t seed);
}  // namespace serial

}  // namespace muso
