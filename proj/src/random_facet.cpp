#include "muso/random_facet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>

namespace muso {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class FacetSolver {
 public:
  FacetSolver(const Orientation& o, std::uint64_t seed)
      : o_(o), rng_(seed), seen_(o.vertex_count(), 0) {
    const int n = o.dim();
    call_cap_ = n >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n));
  }

  Subset query(Subset v) {
    if (!seen_[v]) {
      seen_[v] = 1;
      ++evaluations_;
    }
    return o_[v];
  }

  Subset solve(Subset v, Subset span, int depth) {
    if (++calls_ > call_cap_) throw std::runtime_error("random_facet: call cap 4^n exceeded; input is not a USO");
    depth_ = std::max(depth_, depth);
    if (span == 0) return v;
    std::uint64_t k = uniform_below(static_cast<std::uint64_t>(cardinality(span)), rng_);
    Subset rest = span;
    while (k--) rest &= rest - 1;
    const int d = std::countr_zero(rest);
    const Subset facet = span & ~bit(d);
    const Subset w = solve(v, facet, depth + 1);
    if (!contains(query(w), d)) return w;
    return solve(w ^ bit(d), facet, depth + 1);
  }

  std::uint64_t evaluations() const { return evaluations_; }
  int depth() const { return depth_; }

 private:
  const Orientation& o_;
  std::mt19937_64 rng_;
  std::vector<std::uint8_t> seen_;
  std::uint64_t evaluations_ = 0;
  std::uint64_t calls_ = 0;
  std::uint64_t call_cap_;
  int depth_ = 0;
};

TrialStats finish(std::string family, const Orientation& o, std::uint64_t trials, std::uint64_t seed,
                  std::uint64_t sum, std::uint64_t sum_sq_exact, std::uint64_t min, std::uint64_t max,
                  std::uint64_t correct) {
  TrialStats s;
  s.family = std::move(family);
  s.n = o.dim();
  s.trials = trials;
  s.seed = seed;
  s.mean = static_cast<double>(sum) / static_cast<double>(trials);
  if (trials > 1) {
    const long double t = static_cast<long double>(trials);
    const long double var =
        (static_cast<long double>(sum_sq_exact) - static_cast<long double>(sum) * sum / t) / (t - 1);
    s.stddev = static_cast<double>(std::sqrt(std::max<long double>(var, 0)));
  }
  s.min = min;
  s.max = max;
  s.correct = correct;
  return s;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

RfResult random_facet(const Orientation& o, Subset start, std::uint64_t seed) {
  if (start & ~full_set(o.dim())) throw std::invalid_argument("random_facet: start vertex out of range");
  FacetSolver solver(o, seed);
  RfResult r;
  r.sink = solver.solve(start, full_set(o.dim()), 0);
  if (solver.query(r.sink) != 0) throw std::runtime_error("random_facet: result is not a sink; input is not a USO");
  r.evaluations = solver.evaluations();
  r.recursion_depth = solver.depth();
  return r;
}

std::vector<std::string> family_names() { return {"loops", "path", "star", "broken-chain", "random"}; }

InfluenceGraph family_graph(std::string_view family, int n, std::uint64_t seed) {
  InfluenceGraph g(n);
  if (family == "loops") return g;
  if (family == "path") {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) g.set_edge(i, j, true);
    }
    return g;
  }
  if (family == "star") {
    for (int j = 1; j < n; ++j) g.set_edge(0, j, true);
    return g;
  }
  if (family == "broken-chain") {
    // Complete chain minus (i, i+2) for even i: G1 at (i, i+1, i+2).
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!(j == i + 2 && i % 2 == 0)) g.set_edge(i, j, true);
      }
    }
    return g;
  }
  if (family == "random") {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(n)));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() >> 63) g.set_edge(i, j, true);
      }
    }
    return g;
  }
  std::string known;
  for (const auto& name : family_names()) known += (known.empty() ? "" : ", ") + name;
  throw std::invalid_argument("unknown family '" + std::string(family) + "' (known: " + known + ")");
}

namespace serial {

TrialStats run_trials_on(const Orientation& o, std::string family, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const Subset sink = global_sink(o);
  const Subset start = sink ^ full_set(o.dim());
  std::uint64_t sum = 0, sum_sq = 0, mn = ~std::uint64_t{0}, mx = 0, correct = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const RfResult r = random_facet(o, start, stream_seed(seed, t));
    sum += r.evaluations;
    sum_sq += r.evaluations * r.evaluations;
    mn = std::min(mn, r.evaluations);
    mx = std::max(mx, r.evaluations);
    correct += r.sink == sink ? 1 : 0;
  }
  return finish(std::move(family), o, trials, seed, sum, sum_sq, mn, mx, correct);
}

}  // namespace serial

TrialStats run_trials_on(const Orientation& o, std::string family, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const Subset sink = global_sink(o);
  const Subset start = sink ^ full_set(o.dim());
  std::uint64_t sum = 0, sum_sq = 0, mn = ~std::uint64_t{0}, mx = 0, correct = 0;
  const std::int64_t count = static_cast<std::int64_t>(trials);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  // Integer reductions are order independent, so the result does not depend
  // on the thread count.
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : sum, sum_sq, correct) reduction(min : mn) \
    reduction(max : mx)
  for (std::int64_t t = 0; t < count; ++t) {
    RfResult r;
    try {
      r = random_facet(o, start, stream_seed(seed, static_cast<std::uint64_t>(t)));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      continue;
    }
    sum += r.evaluations;
    sum_sq += r.evaluations * r.evaluations;
    mn = std::min(mn, r.evaluations);
    mx = std::max(mx, r.evaluations);
    correct += r.sink == sink ? 1 : 0;
  }
  if (failure) std::rethrow_exception(failure);
  return finish(std::move(family), o, trials, seed, sum, sum_sq, mn, mx, correct);
}

std::vector<TrialStats> run_trials(std::string_view family, std::span<const int> n_list, std::uint64_t trials,
                                   std::uint64_t seed) {
  std::vector<TrialStats> out;
  for (int n : n_list) {
    const Orientation o = build_matousek(family_graph(family, n, seed));
    out.push_back(run_trials_on(o, std::string(family), trials, seed));
  }
  return out;
}

std::string to_csv(std::span<const TrialStats> stats) {
  std::string out = "family,n,trials,seed,mean,stddev,min,max\n";
  char line[256];
  for (const TrialStats& s : stats) {
    std::snprintf(line, sizeof line, "%s,%d,%llu,%llu,%.6f,%.6f,%llu,%llu\n", s.family.c_str(), s.n,
                  static_cast<unsigned long long>(s.trials), static_cast<unsigned long long>(s.seed), s.mean,
                  s.stddev, static_cast<unsigned long long>(s.min), static_cast<unsigned long long>(s.max));
    out += line;
  }
  return out;
}

}  // namespace muso
