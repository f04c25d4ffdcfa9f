#include <kacrep/errors.hpp>
#include <kacrep/kacmod.hpp>

#include <doctest.h>

using namespace kacrep;

namespace {

// Applies the matrices at a binding to a rational vector.
std::vector<Rational> apply_at(const PolyMatrix& m, const Bindings& at, const std::vector<Rational>& x) {
  const auto s = m.substitute(at);
  std::vector<Rational> y(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, p] : s.row(r)) y[r] += p.constant_value() * x[c];
  }
  return y;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& q : v) {
    if (q != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("u1 (v1 x top) = b top on sl(2|1)") {
  for (int a : {0, 1, 4}) {
    const auto alg = make_algebra({2, 1, Flavor::sl});
    const auto L = build_even_irrep(alg, {a});
    const auto M = inducing_module(L);
    const auto out = normal_order_odd(alg->sc, M, 1, {1}, 0);
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == std::make_pair(std::vector<int>{}, std::size_t{0}));
    CHECK(out.begin()->second == ParamPoly::variable(alg->params, "b"));
    // generating layer is killed
    CHECK(normal_order_odd(alg->sc, M, 2, {}, 0).empty());
  }
}

TEST_CASE("sl(2|1) quartet") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto K = build_kac_module(alg, {0});
  REQUIRE(K.dim() == 4);
  // basis: top, v1 top, v2 top, v1 v2 top
  CHECK(K.rep.basis[0].odd_subset.empty());
  CHECK(K.rep.basis[1].odd_subset == std::vector<int>{1});
  CHECK(K.rep.basis[2].odd_subset == std::vector<int>{2});
  CHECK(K.rep.basis[3].odd_subset == std::vector<int>{1, 2});
  CHECK(K.index_of({1, 2}, 0) == 3);
  const auto b = ParamPoly::variable(alg->params, "b");
  const auto& Y = K.rep.matrix(kY);
  const auto y0 = Rational(-2) * b;
  CHECK(Y.at(0, 0) == y0);
  CHECK(Y.at(1, 1) == y0 - ParamPoly(alg->params, Rational(1)));
  CHECK(Y.at(2, 2) == y0 - ParamPoly(alg->params, Rational(1)));
  CHECK(Y.at(3, 3) == y0 - ParamPoly(alg->params, Rational(2)));
  // v's are parameter free, u's linear in b
  CHECK(K.rep.matrix(v_(1)).is_parameter_free());
  CHECK(K.rep.matrix(u_(1)).degree("b") == 1);
  CHECK(check_super_relations(K.rep, alg->sc).passed());
  CHECK(check_degree_profile(K.rep).passed());
}

TEST_CASE("Kac module dimension and character") {
  struct Case { SuperAlgebraSpec spec; std::vector<int> labels; std::size_t dim; };
  for (const auto& c : {Case{{2, 1, Flavor::sl}, {2}, 12}, Case{{3, 1, Flavor::sl}, {1, 0}, 24},
                        Case{{2, 1, Flavor::gl}, {1}, 8}, Case{{1, 2, Flavor::sl}, {1}, 8}}) {
    CAPTURE(c.spec.name());
    const auto alg = make_algebra(c.spec);
    const auto K = build_kac_module(alg, c.labels);
    CHECK(K.dim() == c.dim);
    CHECK(character(K.rep) == expected_character(K));
    CHECK(check_super_relations(K.rep, alg->sc).passed());
  }
}

TEST_CASE("typicality scalar against the factor product") {
  for (int a : {0, 1, 2}) {
    const auto alg = make_algebra({2, 1, Flavor::sl});
    const auto K = build_kac_module(alg, {a});
    const auto t = kac_typicality(K);
    // factors b and a + b + 1
    const std::vector<Rational> roots = a + 1 < 0 ? std::vector<Rational>{} :
        std::vector<Rational>{Rational(-a - 1), Rational(0)};
    CHECK(t.factor_roots == roots);
    CHECK(t.s_roots == roots);
    CHECK(t.roots_match);
    REQUIRE(t.constant);
    CHECK(*t.constant != 0);
    CHECK(classify(t, Rational(0)).atypical_types == std::vector<int>{1});
    CHECK(classify(t, Rational(-a - 1)).atypical_types == std::vector<int>{2});
    CHECK(classify(t, Rational(5, 7)).typical);
  }
}

TEST_CASE("singular vectors are annihilated by every raising operator") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  for (int a : {0, 1}) {
    const auto K = build_kac_module(alg, {a});
    for (const Rational b : {Rational(0), Rational(-a - 1), Rational(5, 7)}) {
      const auto rep = singular_vectors(K, b, RaisingSet::even_and_odd);
      const Bindings at{{"b", b}};
      CHECK(!rep.vectors.empty());
      for (const auto& v : rep.vectors) {
        CHECK(!all_zero(v.coefficients));
        CHECK(all_zero(apply_at(K.rep.matrix(e_(1)), at, v.coefficients)));
        CHECK(all_zero(apply_at(K.rep.matrix(u_(1)), at, v.coefficients)));
        CHECK(all_zero(apply_at(K.rep.matrix(u_(2)), at, v.coefficients)));
      }
      const bool generic = b == Rational(5, 7);
      CHECK((rep.vectors.size() == 1) == generic);
    }
  }
}

TEST_CASE("atypical sl(2|1) a = 1, b = 0: singular vector in layer one") {
  // v1 top: e and u2 kill it for free, u1 gives b top
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto K = build_kac_module(alg, {1});
  const auto rep = singular_vectors(K, Rational(0), RaisingSet::even_and_odd);
  bool found = false;
  for (const auto& v : rep.vectors) {
    if (v.weight == IntWeight{0, -1, 1}) {
      found = true;
      CHECK(v.layers == std::vector<int>{1});
    }
  }
  CHECK(found);
}

TEST_CASE("even-only raising finds more vectors") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto K = build_kac_module(alg, {0});
  const auto even = singular_vectors(K, Rational(5, 7), RaisingSet::even_only);
  const auto both = singular_vectors(K, Rational(5, 7), RaisingSet::even_and_odd);
  CHECK(even.vectors.size() > both.vectors.size());
}

TEST_CASE("substitute binds parameters") {
  const auto alg = make_algebra({2, 1, Flavor::gl});
  const auto K = build_kac_module(alg, {1});
  const auto S = substitute(K.rep, {{"b", Rational(1, 3)}, {"c", Rational(2)}});
  for (const auto& [l, m] : S.matrices) CHECK(m.is_parameter_free());
  CHECK(check_super_relations(S, alg->sc).passed());
  CHECK(S.matrix(kZ0).at(0, 0).constant_value() == 2);
}

TEST_CASE("sl(2|1) even highest weight (a fv - (a+1) vf) top") {
  for (int a : {1, 2, 3}) {
    const auto alg = make_algebra({2, 1, Flavor::sl});
    const auto K = build_kac_module(alg, {a});
    const auto& P = K.rep.params;
    const std::map<std::size_t, ParamPoly> top{{0, ParamPoly(P, Rational(1))}};
    const auto& F = K.rep.matrix(f_(1));
    const auto& V = K.rep.matrix(v_(1));
    std::vector<Rational> omega(K.dim(), Rational(0));
    for (const auto& [i, p] : F.apply(V.apply(top))) omega[i] += a * p.constant_value();
    for (const auto& [i, p] : V.apply(F.apply(top))) omega[i] -= (a + 1) * p.constant_value();
    CHECK(!all_zero(omega));
    CHECK(all_zero(apply_at(K.rep.matrix(e_(1)), {}, omega)));
    // matches the even-only vector at top - beta_2, at the atypical point and away from it
    for (const Rational b : {Rational(-a - 1), Rational(5, 7)}) {
      const auto sv = singular_vectors(K, b, RaisingSet::even_only);
      int hits = 0;
      for (const auto& v : sv.vectors) {
        if (v.weight != IntWeight{-1, 0, 1}) continue;
        ++hits;
        std::size_t pivot = 0;
        while (omega[pivot] == 0) ++pivot;
        const Rational s = v.coefficients[pivot] / omega[pivot];
        for (std::size_t i = 0; i < K.dim(); ++i) CHECK(v.coefficients[i] == s * omega[i]);
      }
      CHECK(hits == 1);
    }
  }
}
