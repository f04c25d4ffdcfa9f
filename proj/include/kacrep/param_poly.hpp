#pragma once

#include <kacrep/rational.hpp>

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kacrep {

/// Immutable, shareable list of formal parameter names (e.g. {"b", "c"}).
using ParamNames = std::shared_ptr<const std::vector<std::string>>;

ParamNames make_params(std::vector<std::string> names);
ParamNames make_params(std::initializer_list<std::string> names);

/// Same names in the same order.
bool same_params(const ParamNames& a, const ParamNames& b);

/// Assignment of rational values to a subset of the declared parameters.
using Bindings = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial with rational coefficients in a declared list of
/// parameters. Zero coefficients are never stored.
class ParamPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  /// The zero polynomial over an empty parameter list.
  ParamPoly();
  /// The zero polynomial over `params`.
  explicit ParamPoly(ParamNames params);
  ParamPoly(ParamNames params, const Rational& constant);

  static ParamPoly variable(ParamNames params, std::string_view name);
  /// Builds from raw terms; zero coefficients are dropped, exponent lengths checked.
  static ParamPoly from_terms(ParamNames params, Terms terms);

  const ParamNames& params() const { return params_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Degree zero in every parameter.
  bool is_constant() const;
  /// Value of a constant polynomial; throws PreconditionError otherwise.
  Rational constant_value() const;
  /// Coefficient of the all-zero exponent.
  Rational constant_term() const;

  /// Degree in one parameter (0 for the zero polynomial).
  unsigned degree(std::string_view name) const;
  unsigned total_degree() const;

  /// Coefficient of name^power, as a polynomial in the remaining parameters.
  ParamPoly coefficient(std::string_view name, unsigned power) const;

  ParamPoly substitute(const Bindings& bindings) const;
  ParamPoly derivative(std::string_view name) const;

  /// Re-expresses the polynomial over a superset parameter list.
  ParamPoly rebase(const ParamNames& wider) const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& s);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
  friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }
  ParamPoly operator-() const;

  /// Structural equality; requires the same parameter list.
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  /// Human-readable form, e.g. "3/2*b + c - 1/4".
  std::string str() const;

  std::size_t index_of(std::string_view name) const;

 private:
  void check_same(const ParamPoly& other, const char* op) const;

  ParamNames params_;
  Terms terms_;
};

enum class PolyOp { add, sub, mul };

/// Dispatch helper over the three ring operations.
ParamPoly poly_arith(const ParamPoly& a, const ParamPoly& b, PolyOp op);

/// Rational roots of a univariate polynomial in `name` (other parameters must be absent),
/// listed with multiplicity in ascending order.
std::vector<Rational> rational_roots(const ParamPoly& p, std::string_view name);

}  // namespace kacrep
