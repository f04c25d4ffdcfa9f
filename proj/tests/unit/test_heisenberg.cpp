#include <kacrep/heisenberg.hpp>

#include <doctest.h>

using namespace kacrep;

TEST_CASE("H brackets land in the centre") {
  const auto alg = make_algebra({2, 1, Flavor::gl});
  const auto H = build_heisenberg(*alg);
  CHECK(H.size() == 2 * static_cast<std::size_t>(alg->datum.P) + 2);
  for (std::size_t a = 0; a < H.size(); ++a) {
    for (std::size_t b = 0; b < H.size(); ++b) {
      for (const auto& [c, v] : H.bracket(a, b)) {
        CHECK((H.basis[c] == kY || H.basis[c] == kZ0));
        CHECK(H.odd(a));
        CHECK(H.odd(b));
      }
    }
  }
  // y-part of {u_i, v_j} is k delta_ij
  CHECK(H.coefficient(u_(1), v_(1), kY) == alg->sc.k);
  CHECK(H.coefficient(u_(1), v_(2), kY) == 0);
}

TEST_CASE("rho_t, phi and K_H on sl(2|1)") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto K = build_kac_module(alg, {1});
  const auto H = build_heisenberg(*alg);
  const TwistSpec spec{2, 1, 0};
  const auto rho = rho_family(K, spec);
  CHECK(rho.params->back() == "t");
  CHECK(check_rho_family(rho, K, spec).passed());
  CHECK(check_mixed_identity(rho, alg->sc).passed());
  const auto phi = phi_map(rho, H);
  CHECK(check_phi_representation(phi, H).passed());
  CHECK(check_super_relations(phi, H).passed());
  CHECK(compare_with_KH(phi, K, spec, H, rho).passed());
}

TEST_CASE("K_H on gl(2|1) with a z0 twist, n = 3") {
  const auto alg = make_algebra({2, 1, Flavor::gl});
  const auto K = build_kac_module(alg, {0});
  const auto H = build_heisenberg(*alg);
  const TwistSpec spec{3, Rational(1, 2), 1};
  const auto rho = rho_family(K, spec);
  const auto phi = phi_map(rho, H);
  CHECK(check_phi_representation(phi, H).passed());
  CHECK(compare_with_KH(phi, K, spec, H).passed());
}

TEST_CASE("a tampered phi is caught") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto K = build_kac_module(alg, {0});
  const auto H = build_heisenberg(*alg);
  auto phi = phi_map(rho_family(K, {2, 1, 0}), H);
  phi.matrices.at(v_(1)) = phi.matrices.at(v_(1)) * Rational(2);
  CHECK(!check_phi_representation(phi, H).passed());
}
