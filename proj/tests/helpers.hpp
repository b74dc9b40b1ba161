#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "muso/cube.hpp"
#include "muso/matousek.hpp"

namespace muso::test {

/// 1-based dimension list to a bitset.
inline Subset dims(std::initializer_list<int> ds) {
  Subset s = 0;
  for (int d : ds) s |= bit(d - 1);
  return s;
}

inline Orientation table(int n, std::vector<Subset> outmaps) { return Orientation(n, std::move(outmaps)); }

/// 1-based edge list.
inline InfluenceGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  InfluenceGraph g(n);
  for (auto [u, v] : edges) g.set_edge(u - 1, v - 1, true);
  return g;
}

}  // namespace muso::test
