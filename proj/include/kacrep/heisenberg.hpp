#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/matryoshka.hpp>
#include <kacrep/representation.hpp>

#include <optional>

namespace kacrep {

/// H = g_{-1} + h' + g_1 with [a_-, a_+]_n = iota'([a_-, a_+]) and every other bracket zero.
/// iota' keeps the y and z0 coordinates (h' = centre of g0) and drops [g0, g0] = span{h, e, f}.
StructureConstants build_heisenberg(const Algebra& alg);

/// The twist with its superdiagonal scaled by t; parameters of K plus "t".
Representation rho_family(const KacModule& K, const TwistSpec& spec);

/// phi(v) = rho_0(v); phi(u), phi(y), phi(z0) = d rho_t / dt. Throws StructuralError when
/// rho_t is not affine in t.
Representation phi_map(const Representation& rho_t, const StructureConstants& H);

/// deg_t <= 1, rho_0 block diagonal, rho_1 equals the twist.
VerificationReport check_rho_family(const Representation& rho_t, const KacModule& K,
                                    const TwistSpec& spec);

/// Every H bracket, grouped as in the lemma: [phi(a-),phi(b-)] = 0, [phi(a),phi(b)] = 0 on
/// g1 + h', [phi(h),phi(a-)] = 0, [phi(a-),phi(a+)] = phi(iota'[a-,a+]).
VerificationReport check_phi_representation(const Representation& phi, const StructureConstants& H);

/// [rho_t(a), rho'(b)] + [rho'(a), rho_t(b)] = rho'([a,b]) as a polynomial identity in t.
VerificationReport check_mixed_identity(const Representation& rho_t, const StructureConstants& sc);

/// L' (x) J_n(nu) as an h'-module: h acts by nu(h) times the shift, nothing else.
InducingModule heisenberg_inducing_module(const KacModule& K, const TwistSpec& spec,
                                          const StructureConstants& H);

/// Free generation over g_{-1}, phi(g_1) = 0 on the generating subspace, the shift action of h',
/// dimensions and characters, and equality of every generator matrix with the module induced
/// directly over H after the canonical basis identification. When rho_t is given, also checks
/// that rho' vanishes on [g0, g0].
VerificationReport compare_with_KH(const Representation& phi, const KacModule& K,
                                   const TwistSpec& spec, const StructureConstants& H,
                                   const std::optional<Representation>& rho_t = std::nullopt);

}  // namespace kacrep
