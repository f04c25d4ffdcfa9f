#include <kacrep/errors.hpp>
#include <kacrep/evenrep.hpp>

#include <doctest.h>

using namespace kacrep;

namespace {

PolyMatrix power(const PolyMatrix& m, int k) {
  auto out = PolyMatrix::identity(m.rows(), m.params());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("Weyl dimensions of sl(3) irreps") {
  const auto d = build_root_datum({3, 1, Flavor::sl});
  CHECK(weyl_dimension(d, {1, 1}) == 8);
  CHECK(weyl_dimension(d, {1, 0}) == 3);
  CHECK(weyl_dimension(d, {0, 1}) == 3);
  CHECK(weyl_dimension(d, {2, 0}) == 6);
  CHECK(weyl_dimension(d, {0, 0}) == 1);
}

TEST_CASE("sl(2) label 2: three-dimensional, f^3 kills the top") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto L = build_even_irrep(alg, {2});
  REQUIRE(L.dim() == 3);
  const auto& f = L.rep.matrix(f_(1));
  const auto& e = L.rep.matrix(e_(1));
  CHECK(!power(f, 2).is_zero());
  CHECK(power(f, 3).is_zero());
  CHECK((e * power(f, 3)).is_zero());
  // h eigenvalues 2, 0, -2 along the f-string
  const auto& h = L.rep.matrix(h_(1));
  CHECK(h.at(0, 0).constant_value() == 2);
  CHECK(h.at(1, 1).constant_value() == 0);
  CHECK(h.at(2, 2).constant_value() == -2);
}

TEST_CASE("even irreps satisfy the even relations") {
  struct Case { SuperAlgebraSpec spec; std::vector<int> labels; std::size_t dim; };
  for (const auto& c : {Case{{2, 1, Flavor::sl}, {3}, 4}, Case{{3, 1, Flavor::sl}, {1, 1}, 8},
                        Case{{3, 1, Flavor::gl}, {2, 1}, 15}, Case{{2, 3, Flavor::gl}, {1, 0, 1}, 6}}) {
    CAPTURE(c.spec.name());
    const auto alg = make_algebra(c.spec);
    const auto L = build_even_irrep(alg, c.labels);
    CHECK(L.dim() == c.dim);
    CHECK(check_super_relations(L.rep, alg->sc, even_labels(alg->sc)).passed());
  }
}

TEST_CASE("hypercharge of the top vector") {
  // sl(2|1): {u1,v1} = -1/2 h1 - 1/2 y acts on the top by b, so y0 = -2b - a
  const auto alg = make_algebra({2, 1, Flavor::sl});
  const auto b = ParamPoly::variable(alg->params, "b");
  CHECK(labels_to_hypercharge(*alg, {3}) == Rational(-2) * b - ParamPoly(alg->params, Rational(3)));
}

TEST_CASE("negative labels rejected") {
  const auto alg = make_algebra({3, 1, Flavor::sl});
  CHECK_THROWS_AS(build_even_irrep(alg, {1, -1}), PreconditionError);
  CHECK_THROWS_AS(build_even_irrep(alg, {1}), PreconditionError);
}

TEST_CASE("depth bound") {
  const auto d = build_root_datum({3, 1, Flavor::sl});
  // lambda - w0 lambda = 2 * rho0 for (1,1): height 4
  CHECK(verma_depth_bound(d, {1, 1}) == 4);
}

TEST_CASE("e f^n top = n (a - n + 1) f^(n-1) top, h f^n top = (a - 2n) f^n top") {
  const auto alg = make_algebra({2, 1, Flavor::sl});
  for (int a : {2, 3, 5}) {
    const auto L = build_even_irrep(alg, {a});
    const auto& e = L.rep.matrix(e_(1));
    const auto& f = L.rep.matrix(f_(1));
    const auto& h = L.rep.matrix(h_(1));
    std::vector<std::map<std::size_t, ParamPoly>> fn{{{0, ParamPoly(L.rep.params, Rational(1))}}};
    for (int n = 1; n <= a + 1; ++n) fn.push_back(f.apply(fn.back()));
    CHECK(fn[a + 1].empty());
    for (int n = 1; n <= a; ++n) {
      auto want = fn[n - 1];
      for (auto& [i, p] : want) p *= Rational(n * (a - n + 1));
      CHECK(e.apply(fn[n]) == want);
      auto hw = fn[n];
      for (auto& [i, p] : hw) p *= Rational(a - 2 * n);
      std::erase_if(hw, [](const auto& kv) { return kv.second.is_zero(); });
      CHECK(h.apply(fn[n]) == hw);
    }
  }
}
