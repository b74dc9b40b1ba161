#include "muso/matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace muso {

CyclicExtension::CyclicExtension(int n, std::vector<Element> order, ElementSet flipped)
    : n_(n), order_(std::move(order)), flipped_(flipped) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("extension size out of range");
  const int size = 2 * n + 1;
  if (static_cast<int>(order_.size()) != size) {
    throw std::invalid_argument("order must list all " + std::to_string(size) + " elements");
  }
  position_.assign(size, -1);
  for (int p = 0; p < size; ++p) {
    const Element e = order_[p];
    if (e < 0 || e >= size || position_[e] != -1) throw std::invalid_argument("order is not a permutation");
    position_[e] = p;
  }
  if (flipped_ & ~((element_bit(2 * n) - 1))) {
    throw std::invalid_argument("F may only contain the elements 1..2n");
  }
}

int CyclicExtension::position_without_q(Element e) const {
  const int p = position_[e];
  return p > position_[q()] ? p - 1 : p;
}

CyclicExtension CyclicExtension::with_q_at(int p) const {
  std::vector<Element> order;
  order.reserve(order_.size());
  for (Element e : order_) {
    if (e != q()) order.push_back(e);
  }
  order.insert(order.begin() + p, q());
  return CyclicExtension(n_, std::move(order), flipped_);
}

std::string element_token(const CyclicExtension& ext, Element e) {
  return e == ext.q() ? std::string("q") : std::to_string(e + 1);
}

bool validate_conditions(const CyclicExtension& ext) {
  const int n = ext.n();
  for (Element e = 0; e < n; ++e) {
    const int a = ext.position_without_q(e);
    const int b = ext.position_without_q(ext.complement(e));
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    for (Element f = 0; f < 2 * n; ++f) {
      const int pf = ext.position_without_q(f);
      const int pfc = ext.position_without_q(ext.complement(f));
      if ((lo <= pf && pf <= hi) != (lo <= pfc && pfc <= hi)) return false;
    }
    const int gap = hi - lo;
    if (gap % 2 == 0) return false;
    const bool one_flipped = ext.is_flipped(e) != ext.is_flipped(ext.complement(e));
    const bool need_one = ((gap - 1) / 2) % 2 == 0;
    if (one_flipped != need_one) return false;
  }
  return true;
}

SignedSet read_off_circuit(const CyclicExtension& ext, ElementSet support) {
  SignedSet c;
  bool positive = true;
  for (Element e : ext.order()) {
    if (!(support & element_bit(e))) continue;
    const bool sign = positive != ext.is_flipped(e);
    (sign ? c.plus : c.minus) |= element_bit(e);
    positive = !positive;
  }
  return c;
}

SignedSet fundamental_circuit(const CyclicExtension& ext, ElementSet basis, Element e) {
  if (basis & element_bit(e)) throw std::invalid_argument("fundamental_circuit: element lies in the basis");
  if (std::popcount(basis) != ext.n()) throw std::invalid_argument("fundamental_circuit: basis must have n elements");
  SignedSet c = read_off_circuit(ext, basis | element_bit(e));
  return c.sign(e) > 0 ? c : c.negated();
}

bool is_p_matroid(const CyclicExtension& ext) {
  const int n = ext.n();
  for (Element i = 0; i < n; ++i) {
    const ElementSet pair = element_bit(i) | element_bit(i + n);
    // One element from each of the other n-1 pairs.
    for (std::uint32_t choice = 0; choice < (1U << (n - 1)); ++choice) {
      ElementSet support = pair;
      int k = 0;
      for (Element j = 0; j < n; ++j) {
        if (j == i) continue;
        support |= element_bit((choice >> k) & 1U ? j + n : j);
        ++k;
      }
      const SignedSet c = read_off_circuit(ext, support);
      if (c.sign(i) != c.sign(i + n)) return false;
    }
  }
  return true;
}

InfluenceGraph g_pi(const CyclicExtension& ext) {
  const int n = ext.n();
  InfluenceGraph g(n);
  for (Element i = 0; i < n; ++i) {
    const int lo = std::min(ext.position(i), ext.position(i + n));
    const int hi = std::max(ext.position(i), ext.position(i + n));
    for (Element j = 0; j < n; ++j) {
      if (j == i) continue;
      const int pj = ext.position(j);
      const int pjc = ext.position(j + n);
      if (lo < pj && pj < hi && lo < pjc && pjc < hi) g.set_edge(i, j, true);
    }
  }
  return g;
}

ElementSet vertex_basis(int n, Subset v) {
  ElementSet basis = 0;
  for (int i = 0; i < n; ++i) basis |= element_bit(contains(v, i) ? i + n : i);
  return basis;
}

namespace {

Subset outmap_from_circuit(int n, const SignedSet& c) {
  Subset out = 0;
  for (int i = 0; i < n; ++i) {
    if ((c.minus & element_bit(i)) || (c.minus & element_bit(i + n))) out |= bit(i);
  }
  return out;
}

}  // namespace

namespace serial {

Orientation extension_to_uso(const CyclicExtension& ext) {
  const int n = ext.n();
  std::vector<Subset> out(std::size_t{1} << n);
  for (Subset v = 0; v < static_cast<Subset>(out.size()); ++v) {
    out[v] = outmap_from_circuit(n, fundamental_circuit(ext, vertex_basis(n, v), ext.q()));
  }
  return Orientation(n, std::move(out));
}

}  // namespace serial

Orientation extension_to_uso(const CyclicExtension& ext) {
  const int n = ext.n();
  const std::int64_t n_vertices = std::int64_t{1} << n;
  std::vector<Subset> out(n_vertices);
#pragma omp parallel for schedule(static) if (n_vertices >= 1024)
  for (std::int64_t vi = 0; vi < n_vertices; ++vi) {
    const Subset v = static_cast<Subset>(vi);
    out[v] = outmap_from_circuit(n, fundamental_circuit(ext, vertex_basis(n, v), ext.q()));
  }
  return Orientation(n, std::move(out));
}

std::vector<SignedSet> circuit_list(const CyclicExtension& ext) {
  const int n = ext.n();
  if (n > 6) throw std::invalid_argument("circuit_list: n too large for enumeration");
  const int ground = 2 * n + 1;
  std::vector<SignedSet> circuits;
  for (ElementSet s = 0; s < element_bit(ground); ++s) {
    if (std::popcount(s) != n + 1) continue;
    const SignedSet c = read_off_circuit(ext, s);
    circuits.push_back(c);
    circuits.push_back(c.negated());
  }
  return circuits;
}

bool verify_circuit_axioms(std::span<const SignedSet> circuits) {
  std::vector<SignedSet> sorted(circuits.begin(), circuits.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const SignedSet& c) { return std::binary_search(sorted.begin(), sorted.end(), c); };

  for (const SignedSet& x : circuits) {
    if (x.support() == 0 || (x.plus & x.minus)) return false;  // C0, well-formedness
    if (!member(x.negated())) return false;                     // C1
  }
  for (const SignedSet& x : circuits) {
    for (const SignedSet& y : circuits) {
      // C2
      if ((x.support() & ~y.support()) == 0 && !(x == y || x == y.negated())) return false;
      // C3
      if (x == y.negated()) continue;
      const ElementSet pivots = x.plus & y.minus;
      for (int e = 0; e < 64; ++e) {
        if (!(pivots & element_bit(e))) continue;
        const ElementSet allowed_plus = (x.plus | y.plus) & ~element_bit(e);
        const ElementSet allowed_minus = (x.minus | y.minus) & ~element_bit(e);
        const bool eliminated = std::any_of(sorted.begin(), sorted.end(), [&](const SignedSet& z) {
          return (z.plus & ~allowed_plus) == 0 && (z.minus & ~allowed_minus) == 0;
        });
        if (!eliminated) return false;
      }
    }
  }
  return true;
}

bool verify_circuit_axioms(const CyclicExtension& ext) { return verify_circuit_axioms(circuit_list(ext)); }

}  // namespace muso
