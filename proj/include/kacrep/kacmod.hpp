#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/evenrep.hpp>
#include <kacrep/representation.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kacrep {

/// A module for the even part of a type-I superalgebra, to be induced. `action` holds a matrix
/// for every even basis label of the superalgebra; `weights` are offsets from the top weight.
struct InducingModule {
  ParamNames params;
  std::size_t dim = 0;
  std::vector<IntWeight> weights;
  std::map<GeneratorLabel, PolyMatrix> action;
};

InducingModule inducing_module(const EvenModule& L);

/// Linear combination of (odd subset, even index) pairs.
using KacVector = std::map<std::pair<std::vector<int>, std::size_t>, ParamPoly>;

/// Odd generators split by hypercharge grade: v's lower, u's raise.
struct OddSplit {
  std::vector<std::size_t> lowering;  // sc index of v_1..v_P
  std::vector<std::size_t> raising;   // sc index of u_1..u_P
};

OddSplit split_odd(const StructureConstants& sc);

/// u_j (v_S (x) w): each step contracts u_j with one v, the resulting even element acting on
/// the tail; signs alternate with the position. Returns zero on the generating layer.
KacVector normal_order_odd(const StructureConstants& sc, const InducingModule& M, int u_index,
                           const std::vector<int>& subset, std::size_t even_index);

/// Induced module over any type-I superalgebra given by its structure constants. Basis order:
/// layer, then lex on the odd subset, then even index.
Representation induce(const StructureConstants& sc, const InducingModule& M,
                      std::string kind = "kac");

struct KacModule {
  std::shared_ptr<const Algebra> algebra;
  EvenModule even;
  Representation rep;  // kind "kac"; params b (and c for gl)

  const std::vector<int>& labels() const { return even.labels; }
  const ParamPoly& y0() const { return even.y0; }
  std::size_t dim() const { return rep.dim; }
  /// Basis index of (subset, even index).
  std::size_t index_of(const std::vector<int>& subset, std::size_t even_index) const;
};

KacModule build_kac_module(std::shared_ptr<const Algebra> alg, const std::vector<int>& labels);

struct TypicalityResult {
  ParamPoly s;                        // coefficient of the top vector in U_P..U_1 V_P..V_1
  std::vector<ParamPoly> factors;     // <Lambda + rho | beta_i>
  ParamPoly factor_product;
  std::vector<Rational> s_roots;      // rational roots with multiplicity
  std::vector<Rational> factor_roots;
  bool roots_match = false;
  std::optional<Rational> constant;   // s = constant * product, when that holds
};

TypicalityResult kac_typicality(const KacModule& K);

struct TypicalityClass {
  bool typical = true;
  std::vector<int> atypical_types;  // 1-based odd-root indices with a vanishing factor
};

TypicalityClass classify(const TypicalityResult& t, const Rational& b);

enum class RaisingSet { even_only, even_and_odd };

struct SingularVector {
  IntWeight weight;
  std::vector<Rational> coefficients;  // over the full basis
  std::vector<int> layers;             // layers present in the support
};

struct SingularVectorReport {
  Rational b;
  RaisingSet mode = RaisingSet::even_and_odd;
  std::vector<SingularVector> vectors;
};

/// Nullspace of the stacked raising matrices in each weight space, at b = b_value (c = 0 when
/// present; the raising operators do not involve c).
SingularVectorReport singular_vectors(const KacModule& K, const Rational& b_value, RaisingSet mode);

using Character = std::map<IntWeight, std::size_t>;

Character character(const Representation& rep);

/// prod over odd positive roots (1 + e^{-beta}) times ch L0, expanded independently of the basis.
Character expected_character(const KacModule& K);

/// deg_b(u) <= 1 and deg_b = 0 for h, e, f, v. y and z0 are not constrained.
VerificationReport check_degree_profile(const Representation& rep);

/// Substitutes parameter values into every matrix.
Representation substitute(const Representation& rep, const Bindings& bindings);

}  // namespace kacrep
