#include <kacrep/errors.hpp>
#include <kacrep/linsolve.hpp>
#include <kacrep/param_poly.hpp>
#include <kacrep/poly_matrix.hpp>
#include <kacrep/rational.hpp>

#include <doctest.h>

#include <random>

using namespace kacrep;

namespace {

const ParamNames kBC = make_params({"b", "c"});

ParamPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), exp(0, 2), terms(0, 4);
  ParamPoly::Terms t;
  for (int k = terms(rng); k > 0; --k) {
    Rational q(coef(rng), den(rng));
    q.canonicalize();
    t[{static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))}] += q;
  }
  return ParamPoly::from_terms(kBC, t);
}

ParamPoly var(const char* name) { return ParamPoly::variable(kBC, name); }
ParamPoly cst(const Rational& q) { return ParamPoly(kBC, q); }

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_string(Rational(-1, 4)) == "-1/4");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
}

TEST_CASE("polynomial ring axioms on random samples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == ParamPoly(kBC));
    CHECK(p * cst(1) == p);
    CHECK(poly_arith(p, q, PolyOp::sub) == p + (-q));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(7);
  const Bindings at{{"b", Rational(5, 7)}, {"c", Rational(-3, 2)}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng);
    CHECK((p * q).substitute(at) == p.substitute(at) * q.substitute(at));
    CHECK((p + q).substitute(at) == p.substitute(at) + q.substitute(at));
  }
  // partial binding leaves c
  const auto p = var("b") * var("c") + cst(2);
  CHECK(p.substitute({{"b", Rational(3)}}) == cst(3) * var("c") + cst(2));
}

TEST_CASE("derivative: linear and Leibniz") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng), q = random_poly(rng);
    for (const char* x : {"b", "c"}) {
      CHECK((p + q).derivative(x) == p.derivative(x) + q.derivative(x));
      CHECK((p * q).derivative(x) == p.derivative(x) * q + p * q.derivative(x));
    }
  }
  CHECK((var("b") * var("b") * var("c")).derivative("b") == cst(2) * var("b") * var("c"));
}

TEST_CASE("degree, coefficient, text") {
  const auto p = cst(Rational(3, 2)) * var("b") + var("c") - cst(Rational(1, 4));
  CHECK(p.degree("b") == 1);
  CHECK(p.coefficient("b", 1) == cst(Rational(3, 2)));
  CHECK(p.constant_term() == Rational(-1, 4));
  CHECK(!p.is_constant());
  CHECK(p.str() == "3/2*b + c - 1/4");
}

TEST_CASE("mismatched parameter lists are rejected") {
  const auto other = make_params({"t"});
  CHECK_THROWS_AS(var("b") + ParamPoly::variable(other, "t"), DeclarationError);
  CHECK_THROWS_AS(ParamPoly::variable(kBC, "t"), DeclarationError);
  // rebase to a superset is fine
  const auto wide = make_params({"b", "c", "t"});
  CHECK(var("b").rebase(wide) == ParamPoly::variable(wide, "b"));
}

TEST_CASE("rational roots with multiplicity") {
  const auto b = ParamPoly::variable(make_params({"b"}), "b");
  const auto one = ParamPoly(b.params(), Rational(1));
  // (b + 1)^2 (2b - 3) b
  const auto p = (b + one) * (b + one) * (Rational(2) * b - Rational(3) * one) * b;
  const std::vector<Rational> want = {Rational(-1), Rational(-1), Rational(0), Rational(3, 2)};
  CHECK(rational_roots(p, "b") == want);
  // irreducible quadratic: no rational roots
  CHECK(rational_roots(b * b - Rational(2) * one, "b").empty());
}

TEST_CASE("row reduction: RREF times nullspace vanishes, rank + nullity = cols") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 6), zero(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t R = size(rng), C = size(rng);
    DenseMatrix m(R, C);
    for (std::size_t r = 0; r < R; ++r) {
      for (std::size_t c = 0; c < C; ++c) m(r, c) = zero(rng) ? Rational(entry(rng)) : Rational(0);
    }
    const auto res = row_reduce(m);
    CHECK(res.rank + res.nullspace.size() == C);
    CHECK(res.pivot_columns.size() == res.rank);
    for (const auto& v : res.nullspace) {
      for (std::size_t r = 0; r < R; ++r) {
        Rational s = 0, t = 0;
        for (std::size_t c = 0; c < C; ++c) {
          s += res.rref(r, c) * v[c];
          t += m(r, c) * v[c];
        }
        CHECK(s == 0);
        CHECK(t == 0);
      }
    }
  }
}

TEST_CASE("inverse and solve") {
  DenseMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 1;
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == DenseMatrix::identity(2));
  DenseMatrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
  CHECK(!inverse(s));
  DenseMatrix rhs(2, 1);
  rhs(0, 0) = 1; rhs(1, 0) = 3;
  CHECK(!solve(s, rhs));
}

TEST_CASE("poly matrices refuse parameters in the dense solver") {
  PolyMatrix m(1, 1, kBC);
  m.set(0, 0, var("b"));
  CHECK_THROWS_AS(DenseMatrix::from_poly(m), PreconditionError);
  CHECK(m.substitute({{"b", Rational(2)}}).is_parameter_free());
}

TEST_CASE("super bracket signs") {
  const auto P = make_params(std::vector<std::string>{});
  PolyMatrix x(2, 2, P), y(2, 2, P);
  x.set(0, 1, ParamPoly(P, Rational(1)));
  y.set(1, 0, ParamPoly(P, Rational(1)));
  // odd-odd: anticommutator = identity
  CHECK(super_bracket(x, true, y, true) == PolyMatrix::identity(2, P));
  // even-even: commutator = diag(1, -1)
  auto d = PolyMatrix::identity(2, P);
  d.set(1, 1, ParamPoly(P, Rational(-1)));
  CHECK(super_bracket(x, false, y, false) == d);
}
