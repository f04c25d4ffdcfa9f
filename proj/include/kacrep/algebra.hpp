#pragma once

#include <kacrep/param_poly.hpp>
#include <kacrep/poly_matrix.hpp>
#include <kacrep/rational.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kacrep {

enum class Flavor { gl, sl };

struct SuperAlgebraSpec {
  int m = 0;
  int n = 0;
  Flavor flavor = Flavor::gl;

  /// Throws PreconditionError for m or n < 1 and for m == n (sl(n|n) is excluded; for gl(n|n)
  /// the hypercharge cannot be normalized with a nonzero k).
  void validate() const;
  std::string name() const;  // e.g. "sl(2|1)"
};

Flavor parse_flavor(std::string_view text);
std::string to_string(Flavor f);

enum class GenKind { h, e, f, y, z, u, v };

/// Names one basis element of the superalgebra. For e/f the index runs over all even positive
/// roots, with 1..rank the simple (Chevalley) ones. For u/v it runs over the odd positive roots.
struct GeneratorLabel {
  GenKind kind = GenKind::h;
  int index = 0;

  auto operator<=>(const GeneratorLabel&) const = default;
  bool odd() const { return kind == GenKind::u || kind == GenKind::v; }
  std::string name() const;
  static GeneratorLabel parse(std::string_view text);
};

inline GeneratorLabel h_(int i) { return {GenKind::h, i}; }
inline GeneratorLabel e_(int i) { return {GenKind::e, i}; }
inline GeneratorLabel f_(int i) { return {GenKind::f, i}; }
inline GeneratorLabel u_(int i) { return {GenKind::u, i}; }
inline GeneratorLabel v_(int i) { return {GenKind::v, i}; }
inline const GeneratorLabel kY{GenKind::y, 0};
inline const GeneratorLabel kZ0{GenKind::z, 0};

/// Weights in epsilon/delta coordinates: entry c is the eigenvalue of the diagonal matrix unit
/// E_cc, so the first m entries are epsilon coordinates and the last n are delta coordinates.
using Weight = std::vector<Rational>;
using IntWeight = std::vector<int>;

Weight to_weight(const IntWeight& w);
IntWeight add(const IntWeight& a, const IntWeight& b);

struct EvenRoot {
  std::size_t row = 0;  // root vector is E_{row,col}, row < col, same block
  std::size_t col = 0;
  IntWeight coords;
  std::vector<int> simple_coords;  // expansion over the even simple roots
};

struct OddRoot {
  int i = 0;  // epsilon index, 1..m
  int j = 0;  // delta index, 1..n
  std::size_t row = 0;
  std::size_t col = 0;
  IntWeight coords;  // eps_i - delta_j
};

struct RootDatum {
  SuperAlgebraSpec spec;
  int rank = 0;  // m + n - 2
  int P = 0;     // number of odd positive roots, m*n
  std::vector<IntWeight> simple_roots;
  /// Entry k is the root of e_{k+1} / f_{k+1}; the first `rank` entries are simple.
  std::vector<EvenRoot> even_positive;
  /// Entry idx-1 is beta_idx; beta_1 = eps_m - delta_1 is the simple odd root.
  std::vector<OddRoot> odd_positive;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = alpha_j(h_i)
  Weight rho0;
  Weight rho1;
  Weight rho;
  std::vector<GeneratorLabel> h_prime;         // centre of the even part: y (and z0 for gl)
  std::vector<GeneratorLabel> h_double_prime;  // h_1..h_r

  std::size_t dim() const { return static_cast<std::size_t>(spec.m + spec.n); }
  bool is_even_index(std::size_t c) const { return c < static_cast<std::size_t>(spec.m); }
  /// Odd-root index for eps_i - delta_j.
  int odd_index(int i, int j) const { return (spec.m - i) * spec.n + j; }
};

RootDatum build_root_datum(const SuperAlgebraSpec& spec);

/// Diagonal form with signature (+m, -n).
Rational bilinear_form(const RootDatum& datum, const Weight& w1, const Weight& w2);

struct FundamentalRep {
  SuperAlgebraSpec spec;
  /// (m+n)x(m+n) parameter-free matrices for every basis label.
  std::map<GeneratorLabel, PolyMatrix> matrices;
  Rational y_even;  // y = diag(y_even * I_m, y_odd * I_n)
  Rational y_odd;
};

FundamentalRep build_fundamental_rep(const SuperAlgebraSpec& spec);

using SparseVector = std::map<std::size_t, Rational>;

/// Superbracket table over an ordered basis of a superalgebra.
struct StructureConstants {
  std::vector<GeneratorLabel> basis;
  std::vector<IntWeight> roots;                  // weight of each basis element
  std::vector<std::vector<SparseVector>> table;  // table[a][b] expands [X_a, X_b]
  Rational k;                                    // y-coefficient of {u_1, v_1}

  std::size_t size() const { return basis.size(); }
  bool contains(const GeneratorLabel& label) const;
  std::size_t index(const GeneratorLabel& label) const;
  bool odd(std::size_t a) const { return basis[a].odd(); }
  /// Hypercharge grade: +1 for u, -1 for v, 0 otherwise.
  int grade(std::size_t a) const;
  const SparseVector& bracket(std::size_t a, std::size_t b) const { return table[a][b]; }
  const SparseVector& bracket(const GeneratorLabel& a, const GeneratorLabel& b) const;
  /// Bilinear extension of the table.
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  /// Coefficient of `target` in [a, b].
  Rational coefficient(const GeneratorLabel& a, const GeneratorLabel& b,
                       const GeneratorLabel& target) const;
  std::vector<GeneratorLabel> labels_of(GenKind kind) const;
};

/// Decomposes every superbracket of fundamental matrices in the basis by exact elimination.
StructureConstants structure_constants(const FundamentalRep& rep);

/// Rational typicality factors <Lambda + rho | beta_i>, one per odd positive root, as
/// degree-1 polynomials in "b". Rejects negative labels.
std::vector<ParamPoly> typicality_factors(const RootDatum& datum, const std::vector<int>& labels,
                                          const ParamNames& params);

/// <w + rho | beta_idx> for a weight given as a polynomial coordinate vector.
ParamPoly shifted_pairing(const RootDatum& datum, const std::vector<ParamPoly>& weight, int idx);

/// Epsilon/delta coordinates of the highest weight with even labels `labels` and odd label b,
/// in the gauge lambda_m = 0 (typicality factors do not depend on the gauge).
std::vector<ParamPoly> highest_weight_coords(const RootDatum& datum,
                                             const std::vector<int>& labels,
                                             const ParamNames& params);

/// Everything derived from a spec, shared by the modules built over it.
struct Algebra {
  SuperAlgebraSpec spec;
  RootDatum datum;
  FundamentalRep fundamental;
  StructureConstants sc;
  ParamNames params;  // {"b"} for sl, {"b", "c"} for gl
};

std::shared_ptr<const Algebra> make_algebra(const SuperAlgebraSpec& spec);

}  // namespace kacrep
