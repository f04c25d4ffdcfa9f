#pragma once

#include <kacrep/poly_matrix.hpp>
#include <kacrep/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace kacrep {

/// Dense row-major rational matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);
  /// Requires every entry of `m` to be parameter-free.
  static DenseMatrix from_poly(const PolyMatrix& m);
  PolyMatrix to_poly(const ParamNames& params) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct SolveResult {
  std::size_t rank = 0;
  DenseMatrix rref;
  std::vector<std::size_t> pivot_columns;
  /// Basis of the right nullspace; one vector per free column, with a 1 in that column.
  std::vector<std::vector<Rational>> nullspace;
};

/// Exact reduced row echelon form. Pivots: leftmost column with a nonzero entry at or below the
/// current row, taking the lowest such row index.
SolveResult row_reduce(DenseMatrix m);

/// Precondition: every entry of `m` is parameter-free (substitute first).
SolveResult rational_linear_solve(const PolyMatrix& m);

/// Solves A X = B exactly; nullopt when inconsistent. Free variables are set to zero.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& a);

}  // namespace kacrep
