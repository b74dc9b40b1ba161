#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace muso {

/// GMP rationals; every arithmetic result is kept in lowest terms.
using Rational = mpq_class;

/// Reduced num/den. The two-argument mpq_class constructor does not reduce,
/// so fractions built from parts go through here.
Rational make_rational(long num, long den);

/// Accepts "a", "-a" and "a/b". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Always "num/den", e.g. "-3/1".
std::string format_rational(const Rational& r);

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  RationalMatrix select_columns(const std::vector<int>& cols) const;
  RationalMatrix select_principal(const std::vector<int>& idx) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

Rational determinant(RationalMatrix a);

/// X with A X = B for square A; nullopt when A is singular.
std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b);

std::string to_text(const RationalMatrix& m);

}  // namespace muso
