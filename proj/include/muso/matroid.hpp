#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "muso/cube.hpp"
#include "muso/matousek.hpp"

namespace muso {

/// Ground set of a simple extension of a cyclic-P-matroid with parameter n:
///   ids 0..n-1    the elements 1..n (the basis S),
///   ids n..2n-1   their complements 1+n..2n (the set T),
///   id  2n        the extension element q.
using Element = int;
using ElementSet = std::uint64_t;

constexpr ElementSet element_bit(Element e) { return ElementSet{1} << e; }

struct SignedSet {
  ElementSet plus = 0;
  ElementSet minus = 0;

  ElementSet support() const { return plus | minus; }
  SignedSet negated() const { return {minus, plus}; }
  /// +1, -1 or 0.
  int sign(Element e) const {
    return (plus & element_bit(e)) ? 1 : (minus & element_bit(e)) ? -1 : 0;
  }

  auto operator<=>(const SignedSet&) const = default;
};

/// Placement of the 2n+1 elements on the moment curve (order) together with
/// the reoriented elements F. q is never in F.
class CyclicExtension {
 public:
  CyclicExtension(int n, std::vector<Element> order, ElementSet flipped);

  int n() const { return n_; }
  Element q() const { return 2 * n_; }
  Element complement(Element e) const { return e < n_ ? e + n_ : e - n_; }

  /// order()[p] is the element at position p (0-based).
  std::span<const Element> order() const { return order_; }
  int position(Element e) const { return position_[e]; }
  /// Position among the 2n non-q elements.
  int position_without_q(Element e) const;

  ElementSet flipped() const { return flipped_; }
  bool is_flipped(Element e) const { return (flipped_ & element_bit(e)) != 0; }

  /// Same extension with q moved to position p.
  CyclicExtension with_q_at(int p) const;

  bool operator==(const CyclicExtension&) const = default;

 private:
  int n_;
  std::vector<Element> order_;
  std::vector<int> position_;
  ElementSet flipped_;
};

/// 1-based token: "3" for element 3, "q" for q.
std::string element_token(const CyclicExtension& ext, Element e);

/// Balanced-parentheses condition on the order and parity condition on F,
/// both restricted to the 2n non-q elements.
bool validate_conditions(const CyclicExtension& ext);

/// Circuit on `support` read off the moment curve: alternate signs along the
/// order starting with +, then negate F members. Not normalized.
SignedSet read_off_circuit(const CyclicExtension& ext, ElementSet support);

/// Circuit with support basis + {e}, normalized so that e is positive.
SignedSet fundamental_circuit(const CyclicExtension& ext, ElementSet basis, Element e);

/// Brute force over all almost-complementary supports in E_2n.
bool is_p_matroid(const CyclicExtension& ext);

/// (i, j) is an edge iff the pair of j lies strictly inside the pair of i.
InfluenceGraph g_pi(const CyclicExtension& ext);

/// Vertex v gets the basis {i : i not in v} + {i+n : i in v}; the outmap is
/// every dimension whose element is negative in the q-normalized circuit.
Orientation extension_to_uso(const CyclicExtension& ext);

/// All circuits (both signs) on supports of size n+1 over the 2n+1 elements.
std::vector<SignedSet> circuit_list(const CyclicExtension& ext);

/// Circuit axioms C0-C3 on an explicit circuit list.
bool verify_circuit_axioms(std::span<const SignedSet> circuits);
bool verify_circuit_axioms(const CyclicExtension& ext);

/// Basis of the fundamental circuit for vertex v.
ElementSet vertex_basis(int n, Subset v);

namespace serial {
Orientation extension_to_uso(const CyclicExtension& ext);
}  // namespace serial

}  // namespace muso
