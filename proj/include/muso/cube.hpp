#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace muso {

/// A subset of the dimensions [n]. Dimension d (1-based) is bit d-1.
/// Used for vertices, outmaps and dimension sets alike.
using Subset = std::uint32_t;

inline constexpr int kMaxDim = 20;

constexpr Subset bit(int d) { return Subset{1} << d; }
constexpr Subset full_set(int n) { return n == 0 ? 0 : (~Subset{0} >> (32 - n)); }
constexpr bool contains(Subset s, int d) { return (s >> d) & 1U; }
inline int cardinality(Subset s) { return std::popcount(s); }

/// Human-readable 1-based listing, e.g. "{1,3}".
std::string format_subset(Subset s);

/// Dense outmap table of an n-cube orientation.
///
/// Construction only checks the table shape (2^n entries, no bits above n).
/// Edge consistency is a separate predicate so that malformed tables can be
/// represented and diagnosed.
class Orientation {
 public:
  Orientation(int n, std::vector<Subset> outmaps);

  /// o(v) = v: every edge points towards the smaller endpoint, sink at the empty set.
  static Orientation uniform(int n);

  int dim() const { return n_; }
  std::size_t vertex_count() const { return out_.size(); }
  Subset operator[](Subset v) const { return out_[v]; }
  std::span<const Subset> outmaps() const { return out_; }

  bool operator==(const Orientation&) const = default;

 private:
  int n_;
  std::vector<Subset> out_;
};

/// Subcube: coordinates in `spanning` are free, the rest are taken from `fixed`.
struct Face {
  Subset fixed = 0;
  Subset spanning = 0;

  Face() = default;
  Face(Subset fixed_bits, Subset spanning_dims);

  bool contains_vertex(Subset v) const { return (v & ~spanning) == fixed; }
};

/// Mirror along `mirror`, then relabel dimension d to relabel[d] (0-based).
struct Isomorphism {
  Subset mirror = 0;
  std::vector<int> relabel;

  static Isomorphism identity(int n);
  static Isomorphism mirroring(int n, Subset mirror);
};

Subset permute_subset(Subset s, std::span<const int> relabel);

bool check_orientation(const Orientation& o);

/// Szabó-Welzl condition on all vertex pairs. Throws std::invalid_argument
/// when the table is not edge consistent. OpenMP-parallel over vertices.
bool is_uso(const Orientation& o);

/// Counts the sinks of each of the 3^n faces.
bool unique_sink_per_face(const Orientation& o);

/// Unique vertex with empty outmap; throws std::invalid_argument otherwise.
Subset global_sink(const Orientation& o);

/// o' with permute(o(v)) = o'(permute(v ^ mirror)).
Orientation apply_isomorphism(const Orientation& o, const Isomorphism& iso);

Orientation mirror(const Orientation& o, Subset mirror_dims);

/// Outmaps restricted to the face, in the face's local coordinates
/// (bit k = k-th spanning dimension in increasing order).
Orientation restrict_to_face(const Orientation& o, const Face& f);

namespace serial {
bool is_uso(const Orientation& o);
}  // namespace serial

}  // namespace muso
