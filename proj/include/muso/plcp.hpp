#pragma once

#include <span>
#include <vector>

#include "muso/cube.hpp"
#include "muso/errors.hpp"
#include "muso/linalg.hpp"
#include "muso/matroid.hpp"

namespace muso {

struct PLCPInstance {
  RationalMatrix M;
  std::vector<Rational> q;

  int size() const { return M.rows(); }
  bool operator==(const PLCPInstance&) const = default;
};

struct CandidateSolution {
  std::vector<Rational> w;
  std::vector<Rational> z;
};

/// n x (2n+1) matrix, one column per element id (q last). The column of e is
/// the moment-curve point at the abscissa of its position, negated for F.
RationalMatrix realization_matrix(const CyclicExtension& ext, std::span<const Rational> abscissae);
/// Abscissae 1, 2, ..., 2n+1.
RationalMatrix realization_matrix(const CyclicExtension& ext);

/// M = -V_S^{-1} V_T, q = -V_S^{-1} v_q.
PLCPInstance translate_to_plcp(const RationalMatrix& V, const CyclicExtension& ext);

/// All principal minors strictly positive.
bool is_p_matrix(const RationalMatrix& M);

/// Candidate with w_i = 0 for i in B and z_i = 0 otherwise. Throws DegenerateQ
/// when a free coordinate is zero.
CandidateSolution solve_candidate(const PLCPInstance& inst, Subset B);

/// i is in o(B) iff the free coordinate of pair i is negative.
Orientation plcp_to_uso(const PLCPInstance& inst);

namespace serial {
Orientation plcp_to_uso(const PLCPInstance& inst);
}  // namespace serial

}  // namespace muso
