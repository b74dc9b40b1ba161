#include "muso/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace muso {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& cols) const {
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, cols[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::select_principal(const std::vector<int>& idx) const {
  const int k = static_cast<int>(idx.size());
  RationalMatrix out(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) out(r, c) = (*this)(idx[r], idx[c]);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Rational determinant(RationalMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int n = a.rows();
  const int m = b.cols();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      for (int c = 0; c < m; ++c) std::swap(b(pivot, c), b(col, c));
    }
    const Rational inv = 1 / a(col, col);
    for (int c = col; c < n; ++c) a(col, c) *= inv;
    for (int c = 0; c < m; ++c) b(col, c) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      for (int c = 0; c < m; ++c) b(r, c) -= factor * b(col, c);
    }
  }
  return b;
}

std::string to_text(const RationalMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace muso
