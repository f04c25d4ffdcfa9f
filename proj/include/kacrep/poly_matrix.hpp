#pragma once

#include <kacrep/param_poly.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace kacrep {

/// Sparse matrix of ParamPoly entries over one parameter list. Explicit zeros are never stored.
class PolyMatrix {
 public:
  using Row = std::map<std::size_t, ParamPoly>;

  PolyMatrix() : PolyMatrix(0, 0, nullptr) {}
  PolyMatrix(std::size_t rows, std::size_t cols, ParamNames params);

  static PolyMatrix identity(std::size_t n, ParamNames params);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ParamNames& params() const { return params_; }

  /// Entry value (a zero polynomial when not stored).
  ParamPoly at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, ParamPoly value);
  void add_to(std::size_t r, std::size_t c, const ParamPoly& value);

  const Row& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// True when every entry has degree zero in every parameter.
  bool is_parameter_free() const;
  unsigned degree(std::string_view name) const;

  /// First (row, col) in row-major order where the entries differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const PolyMatrix& other) const;

  /// Entrywise map; zero results are dropped.
  PolyMatrix map(const std::function<ParamPoly(const ParamPoly&)>& f) const;
  PolyMatrix substitute(const Bindings& b) const;
  PolyMatrix derivative(std::string_view name) const;
  PolyMatrix coefficient(std::string_view name, unsigned power) const;
  PolyMatrix rebase(const ParamNames& wider) const;

  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m);
  /// Principal submatrix on the given index list, in that order.
  PolyMatrix restrict_to(const std::vector<std::size_t>& indices) const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  PolyMatrix& operator*=(const Rational& s);

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(PolyMatrix a, const Rational& s) { return a *= s; }
  friend PolyMatrix operator*(const Rational& s, PolyMatrix a) { return a *= s; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Applies the matrix to a sparse column vector.
  std::map<std::size_t, ParamPoly> apply(const std::map<std::size_t, ParamPoly>& v) const;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_;
  std::size_t cols_;
  ParamNames params_;
  std::vector<Row> data_;
};

/// Superbracket XY - (-1)^{|X||Y|} YX.
PolyMatrix super_bracket(const PolyMatrix& x, bool x_odd, const PolyMatrix& y, bool y_odd);

}  // namespace kacrep
