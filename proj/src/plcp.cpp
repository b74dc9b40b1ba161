#include "muso/plcp.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>

namespace muso {

RationalMatrix realization_matrix(const CyclicExtension& ext, std::span<const Rational> abscissae) {
  const int n = ext.n();
  const int size = 2 * n + 1;
  if (static_cast<int>(abscissae.size()) != size) {
    throw std::invalid_argument("realization_matrix: need " + std::to_string(size) + " abscissae");
  }
  for (int p = 1; p < size; ++p) {
    if (!(abscissae[p - 1] < abscissae[p])) throw std::invalid_argument("abscissae must be strictly increasing");
  }
  RationalMatrix V(n, size);
  for (Element e = 0; e < size; ++e) {
    const Rational& x = abscissae[ext.position(e)];
    Rational power = ext.is_flipped(e) ? -1 : 1;
    for (int r = 0; r < n; ++r) {
      V(r, e) = power;
      power *= x;
    }
  }
  return V;
}

RationalMatrix realization_matrix(const CyclicExtension& ext) {
  std::vector<Rational> xs(2 * ext.n() + 1);
  for (std::size_t p = 0; p < xs.size(); ++p) xs[p] = static_cast<long>(p + 1);
  return realization_matrix(ext, xs);
}

PLCPInstance translate_to_plcp(const RationalMatrix& V, const CyclicExtension& ext) {
  const int n = ext.n();
  if (V.rows() != n || V.cols() != 2 * n + 1) throw std::invalid_argument("translate_to_plcp: V must be n x (2n+1)");
  std::vector<int> s_cols(n);
  std::vector<int> rest(n + 1);
  for (int i = 0; i < n; ++i) {
    s_cols[i] = i;
    rest[i] = i + n;
  }
  rest[n] = 2 * n;
  auto x = solve(V.select_columns(s_cols), V.select_columns(rest));
  if (!x) throw std::logic_error("translate_to_plcp: V_S is singular");

  PLCPInstance inst{RationalMatrix(n, n), std::vector<Rational>(n)};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inst.M(r, c) = -(*x)(r, c);
    inst.q[r] = -(*x)(r, n);
  }
  return inst;
}

bool is_p_matrix(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("is_p_matrix: matrix must be square");
  const int n = M.rows();
  if (n > 12) throw std::invalid_argument("is_p_matrix: n > 12 is beyond the brute-force limit");
  for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (contains(subset, i)) idx.push_back(i);
    }
    if (determinant(M.select_principal(idx)) <= 0) return false;
  }
  return true;
}

CandidateSolution solve_candidate(const PLCPInstance& inst, Subset B) {
  const int n = inst.size();
  // Unknown i is z_i for i in B and w_i otherwise; w - M z = q.
  RationalMatrix A(n, n);
  RationalMatrix rhs(n, 1);
  for (int r = 0; r < n; ++r) {
    rhs(r, 0) = inst.q[r];
    for (int c = 0; c < n; ++c) {
      if (contains(B, c)) {
        A(r, c) = -inst.M(r, c);
      } else {
        A(r, c) = r == c ? 1 : 0;
      }
    }
  }
  auto x = solve(std::move(A), std::move(rhs));
  if (!x) throw std::logic_error("solve_candidate: singular basis matrix; M is not a P-matrix");

  CandidateSolution sol{std::vector<Rational>(n), std::vector<Rational>(n)};
  for (int i = 0; i < n; ++i) {
    if ((*x)(i, 0) == 0) {
      throw DegenerateQ("free coordinate " + std::to_string(i + 1) + " is zero for basis " + format_subset(B));
    }
    (contains(B, i) ? sol.z[i] : sol.w[i]) = (*x)(i, 0);
  }
  for (int r = 0; r < n; ++r) {
    Rational lhs = sol.w[r];
    for (int c = 0; c < n; ++c) lhs -= inst.M(r, c) * sol.z[c];
    if (lhs != inst.q[r]) throw std::logic_error("solve_candidate: w - Mz != q after solving");
  }
  return sol;
}

namespace {

Subset outmap_of(const PLCPInstance& inst, Subset B) {
  const CandidateSolution sol = solve_candidate(inst, B);
  Subset out = 0;
  for (int i = 0; i < inst.size(); ++i) {
    const Rational& free = contains(B, i) ? sol.z[i] : sol.w[i];
    if (free < 0) out |= bit(i);
  }
  return out;
}

}  // namespace

namespace serial {

Orientation plcp_to_uso(const PLCPInstance& inst) {
  const int n = inst.size();
  std::vector<Subset> out(std::size_t{1} << n);
  for (Subset B = 0; B < static_cast<Subset>(out.size()); ++B) out[B] = outmap_of(inst, B);
  return Orientation(n, std::move(out));
}

}  // namespace serial

Orientation plcp_to_uso(const PLCPInstance& inst) {
  const int n = inst.size();
  const std::int64_t n_vertices = std::int64_t{1} << n;
  std::vector<Subset> out(n_vertices);
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t B = 0; B < n_vertices; ++B) {
    try {
      out[B] = outmap_of(inst, static_cast<Subset>(B));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return Orientation(n, std::move(out));
}

}  // namespace muso
