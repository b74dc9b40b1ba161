#pragma once

#include <functional>
#include <vector>

#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/realizability.hpp"

namespace muso {

/// Every labeled DAG on n vertices (loops implicit); 543 at n = 4, 29281 at n = 5.
std::vector<InfluenceGraph> all_dags(int n);

/// Every rooted forest on n labeled vertices; (n+1)^(n-1) of them.
std::vector<Branching> all_branchings(int n);

/// Orders of the 2n non-q elements satisfying the interval condition, with q
/// appended last.
std::vector<std::vector<Element>> all_valid_orders(int n);

/// Every (order, F) with q last that passes validate_conditions.
void for_each_valid_extension(int n, const std::function<void(const CyclicExtension&)>& fn);

/// Vertex sets of directed paths that start at a root of the closure of a
/// branching and admit no outside vertex between two path vertices.
std::vector<std::vector<int>> root_paths(const InfluenceGraph& closure);

/// Toggles (s, t) for all s in `path` and t != s.
InfluenceGraph flip_rows(const InfluenceGraph& g, const std::vector<int>& path);

}  // namespace muso
