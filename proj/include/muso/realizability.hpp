#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "muso/cube.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"

namespace muso {

enum class ForbiddenKind { G1, G2 };

/// G1: edges (x,y), (y,z), no (x,z).
/// G2: edges (y,x), (z,x), y and z incomparable.
/// Vertices are 0-based dimensions in the order (x, y, z).
struct ForbiddenWitness {
  ForbiddenKind kind;
  std::array<int, 3> vertices;

  bool operator==(const ForbiddenWitness&) const = default;
};

std::string to_string(ForbiddenKind kind);
/// "G1 at 1,2,3"
std::string describe(const ForbiddenWitness& w);

class NotRealizable : public std::runtime_error {
 public:
  explicit NotRealizable(ForbiddenWitness w);
  const ForbiddenWitness& witness() const { return witness_; }

 private:
  ForbiddenWitness witness_;
};

/// Forest of arborescences; parent[v] == -1 marks a root.
class Branching {
 public:
  explicit Branching(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  /// Children of v in increasing label order; v == -1 lists the roots.
  std::vector<int> children(int v) const;
  /// Direct edges only.
  InfluenceGraph graph() const;
  InfluenceGraph closure() const { return transitive_closure(graph()); }

  bool operator==(const Branching&) const = default;

 private:
  std::vector<int> parent_;
};

/// Lexicographically smallest G1 witness, else the smallest G2 witness.
std::optional<ForbiddenWitness> find_forbidden(const InfluenceGraph& g);

/// The branching whose transitive closure is g, if there is one.
std::optional<Branching> is_branching_closure(const InfluenceGraph& g);

/// Three internally vertex-disjoint source-to-sink paths in a 3-face.
/// Throws std::invalid_argument unless the face spans three dimensions and
/// has a unique source and sink.
bool holt_klee_3face(const Orientation& o, const Face& f);

/// Nested-parentheses order (siblings by increasing root label, q last) and
/// the closing element i+n in F whenever the pair gap parity demands one flip.
CyclicExtension synthesize_extension(const Branching& b);

}  // namespace muso
