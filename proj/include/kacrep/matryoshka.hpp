#pragma once

#include <kacrep/errors.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/representation.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kacrep {

/// Raised for lambda = 0: the extension splits.
class SplitExtensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// u'_j = d u_j / d y0 = k * d u_j / d b, parameter-free, stored over the module's parameters.
struct DerivedOddGenerators {
  std::map<GeneratorLabel, PolyMatrix> u_prime;
  Rational k;
};

DerivedOddGenerators odd_derivative(const KacModule& K);

/// {u'_i, v_j} = k delta_ij I, {u'_i, u'_j} = 0, and the b-derivative of {u_i, u_j} = 0, which
/// reads {u'_i, u_j} + {u_i, u'_j} = 0.
VerificationReport check_heisenberg_identity(const KacModule& K, const DerivedOddGenerators& D);

struct ReplicationSpec {
  int N = 1;
  std::vector<Rational> lambdas;  // N - 1 nonzero values

  void validate() const;
};

/// Functional on h' = span{y, z0}: nu(y) = nu_y, nu(z0) = nu_c.
struct TwistSpec {
  int n = 1;
  Rational nu_y = 1;
  Rational nu_c = 0;

  void validate(const SuperAlgebraSpec& spec) const;
};

/// Block upper-triangular module of size (blocks * D). Block (i, i+1) holds the superdiagonal.
struct ReplicatedModule {
  Representation rep;
  int blocks = 1;
  std::size_t base_dim = 0;
  std::vector<Rational> superdiagonal;  // scalars lambda_i (replicate) or 1 (twist)
  std::optional<TwistSpec> twist;       // set for twists
  GeneratorLabel probe = kY;            // Cartan element with non-semisimple action
};

/// D_nu X = nu_y * k * dX/db + nu_c * dX/dc, for every generator of K.
std::map<GeneratorLabel, PolyMatrix> twist_derivation(const KacModule& K, const Rational& nu_y,
                                                      const Rational& nu_c);

ReplicatedModule replicate(const KacModule& K, const DerivedOddGenerators& D,
                           const ReplicationSpec& spec);
ReplicatedModule twist(const KacModule& K, const TwistSpec& spec);

namespace testing {
/// Same as replicate but accepts lambda = 0, for split-extension controls.
ReplicatedModule replicate_allow_zero(const KacModule& K, const DerivedOddGenerators& D,
                                      const ReplicationSpec& spec);
}  // namespace testing

/// Q U(N=2, 1) Q^-1 = U(N=2, lambda) for every generator, Q = diag(lambda I, I).
VerificationReport rescale_conjugation_check(const KacModule& K, const DerivedOddGenerators& D,
                                             const Rational& lambda);

/// Diagonal blocks equal the base module and only the first superdiagonal is populated.
VerificationReport check_block_structure(const ReplicatedModule& R, const KacModule& K);

/// mu(h) for every Cartan label h, read from [[lambda(h), mu(h)], [0, lambda(h)]] on the top
/// weight space of an N = 2 module (basis order: block-0 vector, block-1 vector).
std::map<GeneratorLabel, ParamPoly> upsilon_extract(const ReplicatedModule& R);

struct IsoDecision {
  bool isomorphic = false;
  std::optional<Rational> ratio;  // nu = ratio * mu
  bool witness_verified = false;  // conjugation by diag(ratio^{n-1},...,1) checked exactly
  std::optional<std::pair<Rational, Rational>> witness_h;  // (coefficient of y, of z0)
  int degree_nu = 0;  // minimal-polynomial degree of h - lambda(h) on the top weight space
  int degree_mu = 0;
};

IsoDecision self_extension_iso_decision(const KacModule& K, const TwistSpec& nu,
                                        const TwistSpec& mu);

/// Degree of the minimal polynomial of the probe element on each generalized weight space.
std::map<IntWeight, int> jordan_minpoly_profile(const ReplicatedModule& R);

/// Degree of the minimal polynomial of (A - d I) restricted to `indices`, where the diagonal d
/// is constant there. Parameters are bound to generic values first.
int minpoly_degree_on(const PolyMatrix& A, const std::vector<std::size_t>& indices);

}  // namespace kacrep
