#include "muso/cube.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

namespace muso {

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int d = 0; d < 32; ++d) {
    if (!contains(s, d)) continue;
    if (!first) out += ',';
    out += std::to_string(d + 1);
    first = false;
  }
  out += '}';
  return out;
}

Orientation::Orientation(int n, std::vector<Subset> outmaps) : n_(n), out_(std::move(outmaps)) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("cube dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                                std::to_string(n));
  }
  if (out_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("outmap table has " + std::to_string(out_.size()) + " entries, expected 2^" +
                                std::to_string(n));
  }
  const Subset mask = full_set(n);
  for (std::size_t v = 0; v < out_.size(); ++v) {
    if (out_[v] & ~mask) {
      throw std::invalid_argument("outmap of vertex " + format_subset(static_cast<Subset>(v)) +
                                  " names a dimension above n");
    }
  }
}

Orientation Orientation::uniform(int n) {
  std::vector<Subset> out(std::size_t{1} << n);
  std::iota(out.begin(), out.end(), Subset{0});
  return Orientation(n, std::move(out));
}

Face::Face(Subset fixed_bits, Subset spanning_dims) : fixed(fixed_bits), spanning(spanning_dims) {
  if (fixed & spanning) throw std::invalid_argument("face: fixed bits overlap spanning dimensions");
}

Isomorphism Isomorphism::identity(int n) {
  Isomorphism iso;
  iso.relabel.resize(n);
  std::iota(iso.relabel.begin(), iso.relabel.end(), 0);
  return iso;
}

Isomorphism Isomorphism::mirroring(int n, Subset mirror_dims) {
  Isomorphism iso = identity(n);
  iso.mirror = mirror_dims;
  return iso;
}

Subset permute_subset(Subset s, std::span<const int> relabel) {
  Subset out = 0;
  for (std::size_t d = 0; d < relabel.size(); ++d) {
    if (contains(s, static_cast<int>(d))) out |= bit(relabel[d]);
  }
  return out;
}

bool check_orientation(const Orientation& o) {
  const Subset n_vertices = static_cast<Subset>(o.vertex_count());
  for (Subset v = 0; v < n_vertices; ++v) {
    for (int d = 0; d < o.dim(); ++d) {
      if (contains(o[v], d) == contains(o[v ^ bit(d)], d)) return false;
    }
  }
  return true;
}

namespace {

void require_orientation(const Orientation& o) {
  if (!check_orientation(o)) throw std::invalid_argument("table is not an edge-consistent orientation");
}

}  // namespace

namespace serial {

bool is_uso(const Orientation& o) {
  require_orientation(o);
  const Subset n_vertices = static_cast<Subset>(o.vertex_count());
  for (Subset v = 0; v < n_vertices; ++v) {
    for (Subset w = v + 1; w < n_vertices; ++w) {
      if (((v ^ w) & (o[v] ^ o[w])) == 0) return false;
    }
  }
  return true;
}

}  // namespace serial

bool is_uso(const Orientation& o) {
  require_orientation(o);
  const std::int64_t n_vertices = static_cast<std::int64_t>(o.vertex_count());
  const Subset* out = o.outmaps().data();
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t vi = 0; vi < n_vertices; ++vi) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    const Subset v = static_cast<Subset>(vi);
    const Subset ov = out[v];
    for (Subset w = v + 1; w < static_cast<Subset>(n_vertices); ++w) {
      if (((v ^ w) & (ov ^ out[w])) == 0) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return ok.load();
}

bool unique_sink_per_face(const Orientation& o) {
  const int n = o.dim();
  const Subset n_vertices = static_cast<Subset>(o.vertex_count());
  const Subset all = full_set(n);
  std::vector<std::uint32_t> sinks(n_vertices);
  // Faces with spanning set D are indexed by their fixed part v & ~D.
  for (Subset span = 0;; ++span) {
    std::fill(sinks.begin(), sinks.end(), 0U);
    for (Subset v = 0; v < n_vertices; ++v) {
      if ((o[v] & span) == 0) ++sinks[v & ~span];
    }
    for (Subset fixed = 0; fixed < n_vertices; ++fixed) {
      if (fixed & span) continue;
      if (sinks[fixed] != 1) return false;
    }
    if (span == all) break;
  }
  return true;
}

Subset global_sink(const Orientation& o) {
  const Subset n_vertices = static_cast<Subset>(o.vertex_count());
  Subset sink = 0;
  int found = 0;
  for (Subset v = 0; v < n_vertices; ++v) {
    if (o[v] == 0) {
      sink = v;
      ++found;
    }
  }
  if (found != 1) {
    throw std::invalid_argument("orientation has " + std::to_string(found) + " global sinks; not a USO");
  }
  return sink;
}

Orientation apply_isomorphism(const Orientation& o, const Isomorphism& iso) {
  const int n = o.dim();
  if (static_cast<int>(iso.relabel.size()) != n) throw std::invalid_argument("isomorphism size mismatch");
  std::vector<bool> seen(n, false);
  for (int image : iso.relabel) {
    if (image < 0 || image >= n || seen[image]) throw std::invalid_argument("relabel is not a permutation");
    seen[image] = true;
  }
  if (iso.mirror & ~full_set(n)) throw std::invalid_argument("mirror set exceeds dimension");

  std::vector<Subset> out(o.vertex_count());
  for (Subset v = 0; v < static_cast<Subset>(out.size()); ++v) {
    out[permute_subset(v ^ iso.mirror, iso.relabel)] = permute_subset(o[v], iso.relabel);
  }
  return Orientation(n, std::move(out));
}

Orientation mirror(const Orientation& o, Subset mirror_dims) {
  std::vector<Subset> out(o.vertex_count());
  for (Subset v = 0; v < static_cast<Subset>(out.size()); ++v) out[v ^ mirror_dims] = o[v];
  return Orientation(o.dim(), std::move(out));
}

Orientation restrict_to_face(const Orientation& o, const Face& f) {
  std::vector<int> dims;
  for (int d = 0; d < o.dim(); ++d) {
    if (contains(f.spanning, d)) dims.push_back(d);
  }
  const int k = static_cast<int>(dims.size());
  if (k == 0) throw std::invalid_argument("cannot restrict to a 0-dimensional face");
  std::vector<Subset> out(std::size_t{1} << k);
  for (Subset local = 0; local < static_cast<Subset>(out.size()); ++local) {
    Subset v = f.fixed;
    for (int j = 0; j < k; ++j) {
      if (contains(local, j)) v |= bit(dims[j]);
    }
    Subset local_out = 0;
    for (int j = 0; j < k; ++j) {
      if (contains(o[v], dims[j])) local_out |= bit(j);
    }
    out[local] = local_out;
  }
  return Orientation(k, std::move(out));
}

}  // namespace muso
