#pragma once

#include <string>
#include <utility>
#include <vector>

#include "muso/cube.hpp"
#include "muso/errors.hpp"

namespace muso {

/// Dimension influence graph on [n]. Rows are out-neighbourhoods and always
/// carry the self-loop bit, so walking a d-edge flips the outmap by row(d).
class InfluenceGraph {
 public:
  explicit InfluenceGraph(int n);

  /// Edges are 0-based (from, to) pairs; loops in the list are ignored.
  static InfluenceGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  Subset row(int d) const { return rows_[d]; }
  const std::vector<Subset>& rows() const { return rows_; }

  bool has_edge(int from, int to) const { return contains(rows_[from], to); }
  void set_edge(int from, int to, bool present);
  void toggle_edge(int from, int to);

  /// In-neighbours of d, loop excluded.
  Subset in_neighbours(int d) const;

  /// Non-loop edges in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_acyclic() const;
  bool is_transitive() const;

  bool operator==(const InfluenceGraph&) const = default;

 private:
  int n_;
  std::vector<Subset> rows_;
};

InfluenceGraph transitive_closure(const InfluenceGraph& g);

/// Matoušek USO with m(empty) = empty. Throws CyclicInfluence on cyclic g.
Orientation build_matousek(const InfluenceGraph& g);

/// Same edge-flip rule without the acyclicity check; the result is an
/// orientation but not necessarily a USO.
Orientation build_from_flip_rule(const InfluenceGraph& g);

/// Recovers the flip pattern of every dimension. Throws NotMatousekType or
/// CyclicInfluence.
InfluenceGraph extract_influence_graph(const Orientation& o);

/// Mirrors a Matoušek-type USO so that its sink is the empty set.
Orientation canonicalize(const Orientation& o);

/// Reverses every edge inside the lower (upper = false) or upper d-facet.
Orientation flip_facet(const Orientation& o, int d, bool upper);

/// Graphviz export; loops omitted, transitive edges dashed.
std::string to_dot(const InfluenceGraph& g);

}  // namespace muso
