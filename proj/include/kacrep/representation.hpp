#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/poly_matrix.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kacrep {

/// Where a basis vector sits: replication block, odd subset of v's, even-factor index, and its
/// weight offset from the highest weight in epsilon/delta coordinates.
struct BasisVectorInfo {
  int block = 0;
  std::vector<int> odd_subset;  // 1-based v indices, strictly increasing
  std::size_t even_index = 0;
  IntWeight weight;

  int layer() const { return static_cast<int>(odd_subset.size()); }
  friend bool operator==(const BasisVectorInfo&, const BasisVectorInfo&) = default;
};

struct Representation {
  std::string kind;  // "fundamental", "even", "kac", "replicated", "twist", "rho_t", "phi", "kh"
  ParamNames params;
  std::size_t dim = 0;
  std::map<GeneratorLabel, PolyMatrix> matrices;
  std::vector<BasisVectorInfo> basis;

  const PolyMatrix& matrix(const GeneratorLabel& label) const;
  /// Basis indices grouped by weight offset, each group ascending.
  std::map<IntWeight, std::vector<std::size_t>> weight_spaces() const;

  /// Same kind, parameter names, basis metadata and matrices.
  friend bool operator==(const Representation& a, const Representation& b);
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string location;  // generator pair, matrix entry, parameter binding
  std::string residual;  // exact offending value
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string location = {}, std::string residual = {});
  void append(const VerificationReport& other, std::string_view prefix = {});
  const CheckResult* first_failure() const;
};

/// Sum_c v_c * matrices[basis[c]] over `params`.
PolyMatrix expand(const StructureConstants& sc, const SparseVector& v,
                  const std::map<GeneratorLabel, PolyMatrix>& matrices, std::size_t dim,
                  const ParamNames& params);

/// Super-commutator of two matrices given by their labels' parity.
PolyMatrix label_bracket(const Representation& rep, const GeneratorLabel& a,
                         const GeneratorLabel& b);

/// For every pair of basis labels (a <= b; the other order follows from super-antisymmetry)
/// the matrix superbracket minus the structure-constant expansion must vanish as a polynomial
/// identity. Pairs outside `only` (when given) are skipped.
VerificationReport check_super_relations(const Representation& rep, const StructureConstants& sc,
                                         const std::optional<std::vector<GeneratorLabel>>& only =
                                             std::nullopt);

/// Ready-made representation of the fundamental matrices.
Representation fundamental_representation(const Algebra& alg);

/// Formats the first nonzero entry of `m` as "entry (r,c) = poly".
std::string describe_first_entry(const PolyMatrix& m);

}  // namespace kacrep
