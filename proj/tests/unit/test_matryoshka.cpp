#include <kacrep/errors.hpp>
#include <kacrep/matryoshka.hpp>

#include <doctest.h>

using namespace kacrep;

namespace {

struct Base {
  std::shared_ptr<const Algebra> alg;
  KacModule K;
  DerivedOddGenerators D;
};

Base base(SuperAlgebraSpec spec, std::vector<int> labels) {
  auto alg = make_algebra(spec);
  auto K = build_kac_module(alg, labels);
  auto D = odd_derivative(K);
  return {alg, std::move(K), std::move(D)};
}

}  // namespace

TEST_CASE("u' is parameter free and satisfies the derivative identities") {
  const auto B = base({2, 1, Flavor::sl}, {1});
  CHECK(B.D.k == Rational(-1, 2));
  for (const auto& [l, m] : B.D.u_prime) CHECK(m.is_parameter_free());
  CHECK(check_heisenberg_identity(B.K, B.D).passed());
}

TEST_CASE("{u'_i, v_j} by hand on the sl(2|1) quartet") {
  // k = -1/2
  const auto B = base({2, 1, Flavor::sl}, {0});
  const auto& up = B.D.u_prime.at(u_(1));
  const auto& v = B.K.rep.matrix(v_(1));
  const auto I = PolyMatrix::identity(4, B.K.rep.params);
  CHECK(super_bracket(up, true, v, true) == I * Rational(-1, 2));
  CHECK(super_bracket(up, true, B.K.rep.matrix(v_(2)), true).is_zero());
}

TEST_CASE("literal {u'_i, u_j} does not vanish") {
  const auto B = base({2, 1, Flavor::sl}, {0});
  const auto m = super_bracket(B.D.u_prime.at(u_(1)), true, B.K.rep.matrix(u_(2)), true);
  CHECK(!m.is_zero());
}

TEST_CASE("replication N = 2, 3") {
  const auto B = base({2, 1, Flavor::sl}, {1});
  for (const auto& spec : {ReplicationSpec{2, {Rational(1)}}, ReplicationSpec{3, {Rational(2), Rational(-3, 5)}}}) {
    const auto R = replicate(B.K, B.D, spec);
    CHECK(R.rep.dim == static_cast<std::size_t>(spec.N) * B.K.dim());
    CHECK(check_super_relations(R.rep, B.alg->sc).passed());
    CHECK(check_block_structure(R, B.K).passed());
    for (const auto& [w, d] : jordan_minpoly_profile(R)) CHECK(d == spec.N);
  }
}

TEST_CASE("lambda = 0 splits") {
  const auto B = base({2, 1, Flavor::sl}, {0});
  CHECK_THROWS_AS(replicate(B.K, B.D, {2, {Rational(0)}}), SplitExtensionError);
  const auto R = testing::replicate_allow_zero(B.K, B.D, {2, {Rational(0)}});
  CHECK(check_super_relations(R.rep, B.alg->sc).passed());
  for (const auto& [w, d] : jordan_minpoly_profile(R)) CHECK(d == 1);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((ReplicationSpec{3, {Rational(1)}}.validate()), PreconditionError);
  CHECK_THROWS_AS((ReplicationSpec{0, {}}.validate()), PreconditionError);
  const SuperAlgebraSpec sl{2, 1, Flavor::sl};
  CHECK_THROWS_AS((TwistSpec{2, 0, 0}.validate(sl)), PreconditionError);
  CHECK_THROWS_AS((TwistSpec{2, 0, 1}.validate(sl)), PreconditionError);
  CHECK_THROWS_AS((TwistSpec{0, 1, 0}.validate(sl)), PreconditionError);
}

TEST_CASE("rescaling the superdiagonal is a conjugation") {
  const auto B = base({3, 1, Flavor::sl}, {1, 0});
  for (const Rational l : {Rational(2), Rational(-3, 5)}) {
    CHECK(rescale_conjugation_check(B.K, B.D, l).passed());
  }
}

TEST_CASE("Upsilon reads off lambda") {
  const auto B = base({2, 1, Flavor::gl}, {1});
  const auto R = replicate(B.K, B.D, {2, {Rational(3)}});
  const auto mu = upsilon_extract(R);
  CHECK(mu.at(kY) == ParamPoly(B.K.rep.params, Rational(3)));
  CHECK(mu.at(kZ0).is_zero());
  CHECK(mu.at(h_(1)).is_zero());
}

TEST_CASE("twists") {
  const auto B = base({2, 1, Flavor::gl}, {0});
  for (const auto& spec : {TwistSpec{2, 1, 0}, TwistSpec{3, 0, 1}, TwistSpec{2, Rational(1, 2), 2}}) {
    const auto T = twist(B.K, spec);
    CHECK(T.rep.dim == static_cast<std::size_t>(spec.n) * B.K.dim());
    CHECK(check_super_relations(T.rep, B.alg->sc).passed());
    CHECK(check_block_structure(T, B.K).passed());
    for (const auto& [w, d] : jordan_minpoly_profile(T)) CHECK(d == spec.n);
  }
  // n = 1 is the base module
  CHECK(twist(B.K, {1, 1, 0}).rep.matrices == B.K.rep.matrices);
}

TEST_CASE("isomorphism decision on gl(2|1)") {
  const auto B = base({2, 1, Flavor::gl}, {0});
  const auto same = self_extension_iso_decision(B.K, {2, 2, 0}, {2, 1, 0});
  CHECK(same.isomorphic);
  CHECK(same.witness_verified);
  REQUIRE(same.ratio);
  CHECK(*same.ratio == 2);
  const auto diff = self_extension_iso_decision(B.K, {2, 1, 0}, {2, 0, 1});
  CHECK(!diff.isomorphic);
}

TEST_CASE("minimal polynomial degree of a Jordan block") {
  const auto P = make_params({"b"});
  PolyMatrix A(3, 3, P);
  for (std::size_t i = 0; i < 3; ++i) A.set(i, i, ParamPoly::variable(P, "b"));
  A.set(0, 1, ParamPoly(P, Rational(1)));
  CHECK(minpoly_degree_on(A, {0, 1, 2}) == 2);
  A.set(1, 2, ParamPoly(P, Rational(1)));
  CHECK(minpoly_degree_on(A, {0, 1, 2}) == 3);
  CHECK(minpoly_degree_on(A, {2}) == 1);
}
