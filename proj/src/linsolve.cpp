#include <kacrep/errors.hpp>
#include <kacrep/linsolve.hpp>

#include <utility>

namespace kacrep {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_poly(const PolyMatrix& m) {
  DenseMatrix d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, p] : m.row(r)) {
      if (!p.is_constant()) {
        throw PreconditionError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") = " + p.str() + " depends on a parameter; substitute first");
      }
      d(r, c) = p.constant_term();
    }
  }
  return d;
}

PolyMatrix DenseMatrix::to_poly(const ParamNames& params) const {
  PolyMatrix m(rows_, cols_, params);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0) m.set(r, c, ParamPoly(m.params(), (*this)(r, c)));
    }
  }
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("dense product shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("dense shape mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

SolveResult row_reduce(DenseMatrix m) {
  SolveResult res;
  const auto rows = m.rows();
  const auto cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = lead; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(lead, j) != 0) m(r, j) -= factor * m(lead, j);
      }
    }
    res.pivot_columns.push_back(c);
    ++lead;
  }
  res.rank = lead;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < res.pivot_columns.size(); ++k) {
      v[res.pivot_columns[k]] = -m(k, free);
    }
    res.nullspace.push_back(std::move(v));
  }
  res.rref = std::move(m);
  return res;
}

SolveResult rational_linear_solve(const PolyMatrix& m) { return row_reduce(DenseMatrix::from_poly(m)); }

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("solve: row count mismatch");
  DenseMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  const auto red = row_reduce(std::move(aug));
  DenseMatrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < red.pivot_columns.size(); ++k) {
    const auto pc = red.pivot_columns[k];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = red.rref(k, a.cols() + c);
  }
  return x;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("inverse of a non-square matrix");
  const auto red = row_reduce(a);
  if (red.rank != a.rows()) return std::nullopt;
  return solve(a, DenseMatrix::identity(a.rows()));
}

}  // namespace kacrep
