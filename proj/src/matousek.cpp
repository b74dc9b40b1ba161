#include "muso/matousek.hpp"

#include <sstream>
#include <stdexcept>

namespace muso {

InfluenceGraph::InfluenceGraph(int n) : n_(n), rows_(n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("influence graph size out of range");
  for (int d = 0; d < n; ++d) rows_[d] = bit(d);
}

InfluenceGraph InfluenceGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  InfluenceGraph g(n);
  for (auto [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw std::invalid_argument("edge (" + std::to_string(from + 1) + "," + std::to_string(to + 1) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (from != to) g.set_edge(from, to, true);
  }
  return g;
}

void InfluenceGraph::set_edge(int from, int to, bool present) {
  if (from == to) throw std::invalid_argument("self-loops are implicit and cannot be changed");
  if (present) {
    rows_[from] |= bit(to);
  } else {
    rows_[from] &= ~bit(to);
  }
}

void InfluenceGraph::toggle_edge(int from, int to) { set_edge(from, to, !has_edge(from, to)); }

Subset InfluenceGraph::in_neighbours(int d) const {
  Subset in = 0;
  for (int u = 0; u < n_; ++u) {
    if (u != d && has_edge(u, d)) in |= bit(u);
  }
  return in;
}

std::vector<std::pair<int, int>> InfluenceGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool InfluenceGraph::is_acyclic() const {
  // Kahn's algorithm on the loop-free part.
  std::vector<int> indeg(n_, 0);
  for (int v = 0; v < n_; ++v) indeg[v] = cardinality(in_neighbours(v));
  std::vector<int> ready;
  for (int v = 0; v < n_; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v = 0; v < n_; ++v) {
      if (v != u && has_edge(u, v) && --indeg[v] == 0) ready.push_back(v);
    }
  }
  return removed == n_;
}

bool InfluenceGraph::is_transitive() const {
  for (int u = 0; u < n_; ++u) {
    Subset reach = 0;
    for (int v = 0; v < n_; ++v) {
      if (has_edge(u, v)) reach |= rows_[v];
    }
    if ((reach & ~rows_[u]) != 0) return false;
  }
  return true;
}

InfluenceGraph transitive_closure(const InfluenceGraph& g) {
  InfluenceGraph closure = g;
  const int n = g.size();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i != k && closure.has_edge(i, k)) {
        for (int j = 0; j < n; ++j) {
          if (j != i && closure.has_edge(k, j)) closure.set_edge(i, j, true);
        }
      }
    }
  }
  return closure;
}

Orientation build_from_flip_rule(const InfluenceGraph& g) {
  const int n = g.size();
  std::vector<Subset> out(std::size_t{1} << n);
  out[0] = 0;
  // Reach v from v minus its lowest dimension; the rule is linear over GF(2),
  // so every path from the empty set yields the same outmap.
  for (Subset v = 1; v < static_cast<Subset>(out.size()); ++v) {
    const int d = std::countr_zero(v);
    out[v] = out[v ^ bit(d)] ^ g.row(d);
  }
  return Orientation(n, std::move(out));
}

Orientation build_matousek(const InfluenceGraph& g) {
  if (!g.is_acyclic()) throw CyclicInfluence("influence graph has a cycle besides the loops");
  return build_from_flip_rule(g);
}

InfluenceGraph extract_influence_graph(const Orientation& o) {
  const int n = o.dim();
  const Subset n_vertices = static_cast<Subset>(o.vertex_count());
  InfluenceGraph g(n);
  for (int d = 0; d < n; ++d) {
    const Subset pattern = o[0] ^ o[bit(d)];
    if (!contains(pattern, d)) {
      throw NotMatousekType("dimension " + std::to_string(d + 1) + " does not flip itself");
    }
    for (Subset v = 0; v < n_vertices; ++v) {
      if ((o[v] ^ o[v ^ bit(d)]) != pattern) {
        throw NotMatousekType("flip pattern of dimension " + std::to_string(d + 1) + " differs at vertex " +
                              format_subset(v));
      }
    }
    for (int e = 0; e < n; ++e) {
      if (e != d && contains(pattern, e)) g.set_edge(d, e, true);
    }
  }
  if (!g.is_acyclic()) throw CyclicInfluence("flip pattern is constant but the influence graph is cyclic");
  return g;
}

Orientation canonicalize(const Orientation& o) {
  extract_influence_graph(o);
  return mirror(o, global_sink(o));
}

Orientation flip_facet(const Orientation& o, int d, bool upper) {
  if (d < 0 || d >= o.dim()) throw std::invalid_argument("flip_facet: dimension out of range");
  const Subset others = full_set(o.dim()) & ~bit(d);
  std::vector<Subset> out(o.outmaps().begin(), o.outmaps().end());
  for (Subset v = 0; v < static_cast<Subset>(out.size()); ++v) {
    if (contains(v, d) == upper) out[v] ^= others;
  }
  return Orientation(o.dim(), std::move(out));
}

std::string to_dot(const InfluenceGraph& g) {
  std::ostringstream os;
  os << "digraph influence {\n";
  for (int d = 0; d < g.size(); ++d) os << "  " << d + 1 << ";\n";
  for (auto [u, v] : g.edges()) {
    bool transitive = false;
    for (int w = 0; w < g.size() && !transitive; ++w) {
      transitive = w != u && w != v && g.has_edge(u, w) && g.has_edge(w, v);
    }
    os << "  " << u + 1 << " -> " << v + 1;
    if (transitive) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace muso
