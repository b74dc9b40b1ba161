#include "muso/realizability.hpp"

#include <functional>

namespace muso {

std::string to_string(ForbiddenKind kind) { return kind == ForbiddenKind::G1 ? "G1" : "G2"; }

std::string describe(const ForbiddenWitness& w) {
  return to_string(w.kind) + " at " + std::to_string(w.vertices[0] + 1) + "," + std::to_string(w.vertices[1] + 1) +
         "," + std::to_string(w.vertices[2] + 1);
}

NotRealizable::NotRealizable(ForbiddenWitness w)
    : std::runtime_error("not realizable: forbidden subgraph " + describe(w)), witness_(w) {}

Branching::Branching(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = size();
  for (int v = 0; v < n; ++v) {
    if (parent_[v] < -1 || parent_[v] >= n || parent_[v] == v) throw std::invalid_argument("invalid parent link");
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int u = parent_[v]; u != -1; u = parent_[u]) {
      if (++steps > n) throw std::invalid_argument("parent links contain a cycle");
    }
  }
}

std::vector<int> Branching::children(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    if (parent_[u] == v) out.push_back(u);
  }
  return out;
}

InfluenceGraph Branching::graph() const {
  InfluenceGraph g(size());
  for (int v = 0; v < size(); ++v) {
    if (parent_[v] != -1) g.set_edge(parent_[v], v, true);
  }
  return g;
}

std::optional<ForbiddenWitness> find_forbidden(const InfluenceGraph& g) {
  const int n = g.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x || !g.has_edge(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (g.has_edge(y, z) && !g.has_edge(x, z)) return ForbiddenWitness{ForbiddenKind::G1, {x, y, z}};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x || !g.has_edge(y, x)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (z == x || !g.has_edge(z, x)) continue;
        if (!g.has_edge(y, z) && !g.has_edge(z, y)) return ForbiddenWitness{ForbiddenKind::G2, {x, y, z}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Branching> is_branching_closure(const InfluenceGraph& g) {
  if (!g.is_transitive()) return std::nullopt;
  const int n = g.size();
  std::vector<int> parent(n, -1);
  for (int v = 0; v < n; ++v) {
    const Subset in = g.in_neighbours(v);
    int best_depth = -1;
    for (int a = 0; a < n; ++a) {
      if (!contains(in, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (contains(in, b) && !g.has_edge(a, b) && !g.has_edge(b, a)) return std::nullopt;
      }
      // The parent is the ancestor with the most ancestors of its own.
      const int depth = cardinality(g.in_neighbours(a));
      if (depth > best_depth) {
        best_depth = depth;
        parent[v] = a;
      }
    }
  }
  return Branching(std::move(parent));
}

bool holt_klee_3face(const Orientation& o, const Face& f) {
  if (cardinality(f.spanning) != 3) throw std::invalid_argument("holt_klee_3face: face must span 3 dimensions");
  const Orientation local = restrict_to_face(o, f);
  int source = -1;
  int sink = -1;
  int n_sources = 0;
  int n_sinks = 0;
  for (Subset v = 0; v < 8; ++v) {
    if (local[v] == 7) {
      source = static_cast<int>(v);
      ++n_sources;
    }
    if (local[v] == 0) {
      sink = static_cast<int>(v);
      ++n_sinks;
    }
  }
  if (n_sources != 1 || n_sinks != 1) {
    throw std::invalid_argument("holt_klee_3face: face has no unique source and sink");
  }

  // Internal-vertex masks of all simple directed source-to-sink paths.
  std::vector<unsigned> paths;
  std::function<void(int, unsigned)> walk = [&](int v, unsigned visited) {
    if (v == sink) {
      paths.push_back(visited & ~((1U << source) | (1U << sink)));
      return;
    }
    for (int d = 0; d < 3; ++d) {
      if (!contains(local[v], d)) continue;
      const int w = v ^ (1 << d);
      if (!(visited & (1U << w))) walk(w, visited | (1U << w));
    }
  };
  walk(source, 1U << source);

  for (std::size_t a = 0; a < paths.size(); ++a) {
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      if (paths[a] & paths[b]) continue;
      for (std::size_t c = b + 1; c < paths.size(); ++c) {
        if (!(paths[c] & (paths[a] | paths[b]))) return true;
      }
    }
  }
  return false;
}

CyclicExtension synthesize_extension(const Branching& b) {
  const int n = b.size();
  std::vector<Element> order;
  order.reserve(2 * n + 1);
  std::function<void(int)> emit = [&](int v) {
    order.push_back(v);
    for (int c : b.children(v)) emit(c);
    order.push_back(v + n);
  };
  for (int root : b.children(-1)) emit(root);
  order.push_back(2 * n);

  std::vector<int> position(2 * n + 1);
  for (int p = 0; p < static_cast<int>(order.size()); ++p) position[order[p]] = p;
  ElementSet flipped = 0;
  for (int i = 0; i < n; ++i) {
    const int gap = position[i + n] - position[i];
    if (((gap - 1) / 2) % 2 == 0) flipped |= element_bit(i + n);
  }
  return CyclicExtension(n, std::move(order), flipped);
}

}  // namespace muso
