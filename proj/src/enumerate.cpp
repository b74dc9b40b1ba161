#include "muso/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace muso {

std::vector<InfluenceGraph> all_dags(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("all_dags: n must be in [1, 5]");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) slots.emplace_back(u, v);
    }
  }
  std::vector<InfluenceGraph> out;
  const std::uint32_t count = 1U << slots.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // A 2-cycle can never be acyclic; skip before building.
    bool two_cycle = false;
    for (std::size_t k = 0; k < slots.size() && !two_cycle; ++k) {
      if (!((mask >> k) & 1U)) continue;
      auto [u, v] = slots[k];
      if (u > v) continue;
      const std::size_t back = static_cast<std::size_t>(v) * (n - 1) + (u < v ? u : u - 1);
      two_cycle = (mask >> back) & 1U;
    }
    if (two_cycle) continue;
    InfluenceGraph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) g.set_edge(slots[k].first, slots[k].second, true);
    }
    if (g.is_acyclic()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Branching> all_branchings(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("all_branchings: n must be in [1, 7]");
  std::vector<Branching> out;
  std::vector<int> parent(n, -1);
  // Odometer over parent[v] in {-1, 0..n-1} \ {v}.
  while (true) {
    bool acyclic = true;
    for (int v = 0; v < n && acyclic; ++v) {
      int steps = 0;
      for (int u = parent[v]; u != -1 && acyclic; u = parent[u]) acyclic = ++steps <= n;
    }
    if (acyclic) out.emplace_back(parent);
    int k = 0;
    for (; k < n; ++k) {
      int next = parent[k] + 1;
      if (next == k) ++next;
      if (next < n) {
        parent[k] = next;
        break;
      }
      parent[k] = -1;
    }
    if (k == n) break;
  }
  return out;
}

std::vector<std::vector<Element>> all_valid_orders(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("all_valid_orders: n must be in [1, 5]");
  std::vector<Element> perm(2 * n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    std::vector<Element> order = perm;
    order.push_back(2 * n);
    std::vector<int> position(2 * n + 1);
    for (int p = 0; p < 2 * n + 1; ++p) position[order[p]] = p;
    ElementSet flipped = 0;
    for (int i = 0; i < n; ++i) {
      const int gap = std::abs(position[i] - position[i + n]);
      if (gap % 2 == 1 && ((gap - 1) / 2) % 2 == 0) flipped |= element_bit(i + n);
    }
    const CyclicExtension ext(n, order, flipped);
    if (validate_conditions(ext)) out.push_back(std::move(order));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void for_each_valid_extension(int n, const std::function<void(const CyclicExtension&)>& fn) {
  for (const auto& order : all_valid_orders(n)) {
    std::vector<int> position(2 * n + 1);
    for (int p = 0; p < 2 * n + 1; ++p) position[order[p]] = p;
    for (std::uint32_t choice = 0; choice < (1U << n); ++choice) {
      ElementSet flipped = 0;
      for (int i = 0; i < n; ++i) {
        const int gap = std::abs(position[i] - position[i + n]);
        const bool need_one = ((gap - 1) / 2) % 2 == 0;
        const bool alt = (choice >> i) & 1U;
        if (need_one) {
          flipped |= element_bit(alt ? i : i + n);
        } else if (alt) {
          flipped |= element_bit(i) | element_bit(i + n);
        }
      }
      fn(CyclicExtension(n, order, flipped));
    }
  }
}

std::vector<std::vector<int>> root_paths(const InfluenceGraph& closure) {
  const int n = closure.size();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto admissible = [&](const std::vector<int>& s) {
    Subset members = 0;
    for (int v : s) members |= bit(v);
    for (int u : s) {
      for (int w : s) {
        for (int v = 0; v < n; ++v) {
          if (!contains(members, v) && v != u && v != w && closure.has_edge(u, v) && closure.has_edge(v, w)) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto extend = [&](auto& self, int v) -> void {
    path.push_back(v);
    if (admissible(path)) out.push_back(path);
    for (int w = 0; w < n; ++w) {
      if (w != v && closure.has_edge(v, w) && std::find(path.begin(), path.end(), w) == path.end()) self(self, w);
    }
    path.pop_back();
  };
  for (int r = 0; r < n; ++r) {
    if (closure.in_neighbours(r) == 0) extend(extend, r);
  }
  return out;
}

InfluenceGraph flip_rows(const InfluenceGraph& g, const std::vector<int>& path) {
  InfluenceGraph out = g;
  for (int s : path) {
    for (int t = 0; t < g.size(); ++t) {
      if (t != s) out.toggle_edge(s, t);
    }
  }
  return out;
}

}  // namespace muso
