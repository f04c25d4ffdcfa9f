#include <kacrep/errors.hpp>
#include <kacrep/poly_matrix.hpp>

#include <string>

namespace kacrep {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, ParamNames params)
    : rows_(rows), cols_(cols), params_(ParamPoly(std::move(params)).params()), data_(rows) {}

PolyMatrix PolyMatrix::identity(std::size_t n, ParamNames params) {
  PolyMatrix m(n, n, params);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ParamPoly(params, 1));
  return m;
}

void PolyMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw PreconditionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range for " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
}

ParamPoly PolyMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = data_[r].find(c);
  return it == data_[r].end() ? ParamPoly(params_) : it->second;
}

void PolyMatrix::set(std::size_t r, std::size_t c, ParamPoly value) {
  check_index(r, c);
  if (!same_params(value.params(), params_)) {
    throw DeclarationError("matrix entry declared over a different parameter list");
  }
  if (value.is_zero()) {
    data_[r].erase(c);
  } else {
    data_[r].insert_or_assign(c, std::move(value));
  }
}

void PolyMatrix::add_to(std::size_t r, std::size_t c, const ParamPoly& value) {
  check_index(r, c);
  if (value.is_zero()) return;
  auto it = data_[r].find(c);
  if (it == data_[r].end()) {
    set(r, c, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) data_[r].erase(it);
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool PolyMatrix::is_parameter_free() const {
  for (const auto& row : data_) {
    for (const auto& [c, p] : row) {
      if (!p.is_constant()) return false;
    }
  }
  return true;
}

unsigned PolyMatrix::degree(std::string_view name) const {
  unsigned d = 0;
  for (const auto& row : data_) {
    for (const auto& [c, p] : row) d = std::max(d, p.degree(name));
  }
  return d;
}

std::optional<std::pair<std::size_t, std::size_t>> PolyMatrix::first_difference(
    const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw PreconditionError("cannot compare matrices of different shapes");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r] == other.data_[r]) continue;
    auto a = data_[r].begin();
    auto b = other.data_[r].begin();
    while (a != data_[r].end() || b != other.data_[r].end()) {
      if (b == other.data_[r].end() || (a != data_[r].end() && a->first < b->first)) {
        return std::pair{r, a->first};
      }
      if (a == data_[r].end() || b->first < a->first) return std::pair{r, b->first};
      if (!(a->second == b->second)) return std::pair{r, a->first};
      ++a;
      ++b;
    }
  }
  return std::nullopt;
}

PolyMatrix PolyMatrix::map(const std::function<ParamPoly(const ParamPoly&)>& f) const {
  PolyMatrix out(rows_, cols_, params_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, p] : data_[r]) {
      auto v = f(p);
      if (!v.is_zero()) out.data_[r].emplace(c, std::move(v));
    }
  }
  return out;
}

PolyMatrix PolyMatrix::substitute(const Bindings& b) const {
  return map([&](const ParamPoly& p) { return p.substitute(b); });
}

PolyMatrix PolyMatrix::derivative(std::string_view name) const {
  return map([&](const ParamPoly& p) { return p.derivative(name); });
}

PolyMatrix PolyMatrix::coefficient(std::string_view name, unsigned power) const {
  return map([&](const ParamPoly& p) { return p.coefficient(name, power); });
}

PolyMatrix PolyMatrix::rebase(const ParamNames& wider) const {
  PolyMatrix out(rows_, cols_, wider);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, p] : data_[r]) out.data_[r].emplace(c, p.rebase(out.params_));
  }
  return out;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                             std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw PreconditionError("block out of range");
  PolyMatrix out(rows, cols, params_);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& src = data_[r0 + r];
    for (auto it = src.lower_bound(c0); it != src.end() && it->first < c0 + cols; ++it) {
      out.data_[r].emplace(it->first - c0, it->second);
    }
  }
  return out;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw PreconditionError("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r) {
    auto& dst = data_[r0 + r];
    for (auto it = dst.lower_bound(c0); it != dst.end() && it->first < c0 + m.cols_;) {
      it = dst.erase(it);
    }
    for (const auto& [c, p] : m.data_[r]) set(r0 + r, c0 + c, p);
  }
}

PolyMatrix PolyMatrix::restrict_to(const std::vector<std::size_t>& indices) const {
  std::map<std::size_t, std::size_t> position;
  for (std::size_t k = 0; k < indices.size(); ++k) position.emplace(indices[k], k);
  PolyMatrix out(indices.size(), indices.size(), params_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (const auto& [c, p] : data_.at(indices[k])) {
      const auto it = position.find(c);
      if (it != position.end()) out.data_[k].emplace(it->second, p);
    }
  }
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw PreconditionError("matrix addition shape mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, p] : other.data_[r]) add_to(r, c, p);
  }
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw PreconditionError("matrix subtraction shape mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, p] : other.data_[r]) add_to(r, c, -p);
  }
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& [c, p] : row) p *= s;
  }
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw PreconditionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  if (!same_params(a.params_, b.params_)) {
    throw DeclarationError("matrix product over different parameter lists");
  }
  PolyMatrix out(a.rows_, b.cols_, a.params_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto& acc = out.data_[r];
    for (const auto& [k, x] : a.data_[r]) {
      for (const auto& [c, y] : b.data_[k]) {
        auto term = x * y;
        auto it = acc.find(c);
        if (it == acc.end()) {
          if (!term.is_zero()) acc.emplace(c, std::move(term));
        } else {
          it->second += term;
        }
      }
    }
    for (auto it = acc.begin(); it != acc.end();) {
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (!same_params(a.params_, b.params_)) {
    throw DeclarationError("matrix comparison over different parameter lists");
  }
  return a.data_ == b.data_;
}

std::map<std::size_t, ParamPoly> PolyMatrix::apply(const std::map<std::size_t, ParamPoly>& v) const {
  std::map<std::size_t, ParamPoly> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    ParamPoly acc(params_);
    bool touched = false;
    for (const auto& [c, p] : data_[r]) {
      const auto it = v.find(c);
      if (it == v.end()) continue;
      acc += p * it->second;
      touched = true;
    }
    if (touched && !acc.is_zero()) out.emplace(r, std::move(acc));
  }
  return out;
}

PolyMatrix super_bracket(const PolyMatrix& x, bool x_odd, const PolyMatrix& y, bool y_odd) {
  auto xy = x * y;
  const auto yx = y * x;
  if (x_odd && y_odd) return xy += yx;
  return xy -= yx;
}

}  // namespace kacrep
