#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/representation.hpp>

#include <memory>
#include <vector>

namespace kacrep {

/// Finite-dimensional irreducible module of the even subalgebra. The semisimple generators act
/// by parameter-free matrices; y and z0 act by the scalars y0 and c.
struct EvenModule {
  std::shared_ptr<const Algebra> algebra;
  std::vector<int> labels;
  ParamPoly y0;
  ParamPoly c;  // zero polynomial for sl
  /// f-word of each basis vector: (j1,...,jk) means f_{j1} ... f_{jk} applied to the top vector.
  std::vector<std::vector<int>> words;
  Representation rep;  // kind "even"; params of the algebra

  std::size_t dim() const { return rep.dim; }
};

/// y0 = (b - sum_a d^a_11 a_a - d_z c) / k, read from {u_1, v_1}.
ParamPoly labels_to_hypercharge(const Algebra& alg, const std::vector<int>& labels);

/// Weight-space basis via the contravariant (Shapovalov) form on Verma weight spaces.
/// Throws PreconditionError on negative labels and StructuralError if the dimension disagrees
/// with weyl_dimension.
EvenModule build_even_irrep(std::shared_ptr<const Algebra> alg, const std::vector<int>& labels);

/// Product over even positive roots of <lambda + rho0, alpha> / <rho0, alpha>.
mpz_class weyl_dimension(const RootDatum& datum, const std::vector<int>& labels);

/// Height of lambda - w0(lambda): no f-word longer than this survives in the irreducible quotient.
int verma_depth_bound(const RootDatum& datum, const std::vector<int>& labels);

/// Even generator labels of the algebra (h, e, f, y, and z0 for gl).
std::vector<GeneratorLabel> even_labels(const StructureConstants& sc);

}  // namespace kacrep
