#include <kacrep/algebra.hpp>
#include <kacrep/errors.hpp>
#include <kacrep/linsolve.hpp>

#include <algorithm>
#include <charconv>

namespace kacrep {

void SuperAlgebraSpec::validate() const {
  if (m < 1 || n < 1) {
    throw PreconditionError("superalgebra needs m >= 1 and n >= 1, got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
  }
  if (m == n) {
    if (flavor == Flavor::sl) {
      throw PreconditionError(
          "sl(" + std::to_string(m) + "|" + std::to_string(n) +
          ") is excluded: for m = n the identity is supertraceless, the hypercharge is "
          "quantized (psl(n|n) has y = 0) and cannot be differentiated");
    }
    throw PreconditionError("gl(" + std::to_string(m) + "|" + std::to_string(n) +
                            ") is excluded: for m = n no supertraceless hypercharge satisfies "
                            "[y,u] = u, so k would vanish");
  }
}

std::string SuperAlgebraSpec::name() const {
  return to_string(flavor) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "gl") return Flavor::gl;
  if (text == "sl") return Flavor::sl;
  throw PreconditionError("unknown algebra flavor '" + std::string(text) + "' (expected gl or sl)");
}

std::string to_string(Flavor f) { return f == Flavor::gl ? "gl" : "sl"; }

std::string GeneratorLabel::name() const {
  switch (kind) {
    case GenKind::h:
      return "h" + std::to_string(index);
    case GenKind::e:
      return "e" + std::to_string(index);
    case GenKind::f:
      return "f" + std::to_string(index);
    case GenKind::y:
      return "y";
    case GenKind::z:
      return "z0";
    case GenKind::u:
      return "u" + std::to_string(index);
    case GenKind::v:
      return "v" + std::to_string(index);
  }
  return "?";
}

GeneratorLabel GeneratorLabel::parse(std::string_view text) {
  if (text == "y") return kY;
  if (text == "z0") return kZ0;
  if (text.size() >= 2) {
    int idx = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, idx);
    if (ec == std::errc{} && ptr == last && idx >= 1) {
      switch (text[0]) {
        case 'h':
          return {GenKind::h, idx};
        case 'e':
          return {GenKind::e, idx};
        case 'f':
          return {GenKind::f, idx};
        case 'u':
          return {GenKind::u, idx};
        case 'v':
          return {GenKind::v, idx};
        default:
          break;
      }
    }
  }
  throw PreconditionError("unknown generator label '" + std::string(text) + "'");
}

Weight to_weight(const IntWeight& w) {
  Weight out;
  out.reserve(w.size());
  for (int x : w) out.emplace_back(x);
  return out;
}

IntWeight add(const IntWeight& a, const IntWeight& b) {
  IntWeight out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

namespace {

IntWeight unit_difference(std::size_t dim, std::size_t a, std::size_t b) {
  IntWeight w(dim, 0);
  w[a] += 1;
  w[b] -= 1;
  return w;
}

// Simple-root index of e_p - e_{p+1}; p and p+1 lie in the same block.
int simple_index_at(const SuperAlgebraSpec& s, std::size_t p) {
  return static_cast<int>(p) < s.m - 1 ? static_cast<int>(p) : static_cast<int>(p) - 1;
}

}  // namespace

RootDatum build_root_datum(const SuperAlgebraSpec& spec) {
  spec.validate();
  RootDatum d;
  d.spec = spec;
  d.rank = spec.m + spec.n - 2;
  d.P = spec.m * spec.n;
  const std::size_t dim = d.dim();
  const std::size_t m = static_cast<std::size_t>(spec.m);

  std::vector<std::size_t> simple_pos;
  for (std::size_t p = 0; p + 1 < m; ++p) simple_pos.push_back(p);
  for (std::size_t p = m; p + 1 < dim; ++p) simple_pos.push_back(p);
  for (auto p : simple_pos) d.simple_roots.push_back(unit_difference(dim, p, p + 1));

  auto make_even = [&](std::size_t a, std::size_t b) {
    EvenRoot r;
    r.row = a;
    r.col = b;
    r.coords = unit_difference(dim, a, b);
    r.simple_coords.assign(static_cast<std::size_t>(d.rank), 0);
    for (std::size_t p = a; p < b; ++p) r.simple_coords[static_cast<std::size_t>(simple_index_at(spec, p))] += 1;
    return r;
  };
  for (auto p : simple_pos) d.even_positive.push_back(make_even(p, p + 1));
  for (const auto& [lo, hi] : {std::pair{std::size_t{0}, m}, std::pair{m, dim}}) {
    for (std::size_t height = 2; height < hi - lo; ++height) {
      for (std::size_t a = lo; a + height < hi; ++a) d.even_positive.push_back(make_even(a, a + height));
    }
  }

  d.odd_positive.resize(static_cast<std::size_t>(d.P));
  for (int i = 1; i <= spec.m; ++i) {
    for (int j = 1; j <= spec.n; ++j) {
      OddRoot r;
      r.i = i;
      r.j = j;
      r.row = static_cast<std::size_t>(i - 1);
      r.col = m + static_cast<std::size_t>(j - 1);
      r.coords = unit_difference(dim, r.row, r.col);
      d.odd_positive[static_cast<std::size_t>(d.odd_index(i, j) - 1)] = r;
    }
  }

  d.cartan.assign(static_cast<std::size_t>(d.rank), std::vector<int>(static_cast<std::size_t>(d.rank), 0));
  for (std::size_t i = 0; i < simple_pos.size(); ++i) {
    const auto p = simple_pos[i];
    for (std::size_t j = 0; j < simple_pos.size(); ++j) {
      d.cartan[i][j] = d.simple_roots[j][p] - d.simple_roots[j][p + 1];
    }
  }

  d.rho0.assign(dim, Rational(0));
  d.rho1.assign(dim, Rational(0));
  for (const auto& r : d.even_positive) {
    for (std::size_t c = 0; c < dim; ++c) d.rho0[c] += ratio(r.coords[c], 2);
  }
  for (const auto& r : d.odd_positive) {
    for (std::size_t c = 0; c < dim; ++c) d.rho1[c] += ratio(r.coords[c], 2);
  }
  d.rho.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    d.rho[c] = d.rho0[c] - d.rho1[c];
    d.rho[c].canonicalize();
    d.rho0[c].canonicalize();
    d.rho1[c].canonicalize();
  }

  d.h_prime.push_back(kY);
  if (spec.flavor == Flavor::gl) d.h_prime.push_back(kZ0);
  for (int i = 1; i <= d.rank; ++i) d.h_double_prime.push_back(h_(i));
  return d;
}

Rational bilinear_form(const RootDatum& datum, const Weight& w1, const Weight& w2) {
  if (w1.size() != datum.dim() || w2.size() != datum.dim()) {
    throw PreconditionError("weight has the wrong number of epsilon/delta coordinates");
  }
  Rational acc = 0;
  for (std::size_t c = 0; c < datum.dim(); ++c) {
    if (datum.is_even_index(c)) {
      acc += w1[c] * w2[c];
    } else {
      acc -= w1[c] * w2[c];
    }
  }
  return acc;
}

FundamentalRep build_fundamental_rep(const SuperAlgebraSpec& spec) {
  const auto datum = build_root_datum(spec);
  const auto dim = datum.dim();
  const auto none = make_params({});
  FundamentalRep rep;
  rep.spec = spec;
  // [y, E_{i,m+j}] = (y_even - y_odd) E = E and m*y_even = n*y_odd.
  rep.y_even = ratio(spec.n, spec.n - spec.m);
  rep.y_odd = ratio(spec.m, spec.n - spec.m);
  rep.y_even.canonicalize();
  rep.y_odd.canonicalize();

  auto unit = [&](std::size_t r, std::size_t c) {
    PolyMatrix e(dim, dim, none);
    e.set(r, c, ParamPoly(none, 1));
    return e;
  };
  for (int i = 1; i <= datum.rank; ++i) {
    const auto& root = datum.even_positive[static_cast<std::size_t>(i - 1)];
    rep.matrices.emplace(h_(i), unit(root.row, root.row) - unit(root.col, root.col));
  }
  for (std::size_t k = 0; k < datum.even_positive.size(); ++k) {
    const auto& root = datum.even_positive[k];
    rep.matrices.emplace(e_(static_cast<int>(k + 1)), unit(root.row, root.col));
    rep.matrices.emplace(f_(static_cast<int>(k + 1)), unit(root.col, root.row));
  }
  for (std::size_t k = 0; k < datum.odd_positive.size(); ++k) {
    const auto& root = datum.odd_positive[k];
    rep.matrices.emplace(u_(static_cast<int>(k + 1)), unit(root.row, root.col));
    rep.matrices.emplace(v_(static_cast<int>(k + 1)), unit(root.col, root.row));
  }
  PolyMatrix y(dim, dim, none);
  for (std::size_t c = 0; c < dim; ++c) {
    y.set(c, c, ParamPoly(none, datum.is_even_index(c) ? rep.y_even : rep.y_odd));
  }
  rep.matrices.emplace(kY, std::move(y));
  if (spec.flavor == Flavor::gl) rep.matrices.emplace(kZ0, PolyMatrix::identity(dim, none));
  return rep;
}

bool StructureConstants::contains(const GeneratorLabel& label) const {
  return std::binary_search(basis.begin(), basis.end(), label);
}

std::size_t StructureConstants::index(const GeneratorLabel& label) const {
  const auto it = std::lower_bound(basis.begin(), basis.end(), label);
  if (it == basis.end() || *it != label) {
    throw PreconditionError("generator " + label.name() + " is not in the algebra basis");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

int StructureConstants::grade(std::size_t a) const {
  if (basis[a].kind == GenKind::u) return 1;
  if (basis[a].kind == GenKind::v) return -1;
  return 0;
}

const SparseVector& StructureConstants::bracket(const GeneratorLabel& a,
                                                const GeneratorLabel& b) const {
  return table[index(a)][index(b)];
}

SparseVector StructureConstants::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      for (const auto& [c, f] : table[a][b]) {
        auto& slot = out[c];
        slot += ca * cb * f;
        if (slot == 0) out.erase(c);
      }
    }
  }
  return out;
}

Rational StructureConstants::coefficient(const GeneratorLabel& a, const GeneratorLabel& b,
                                         const GeneratorLabel& target) const {
  const auto& v = bracket(a, b);
  if (!contains(target)) return 0;
  const auto it = v.find(index(target));
  return it == v.end() ? Rational(0) : it->second;
}

std::vector<GeneratorLabel> StructureConstants::labels_of(GenKind kind) const {
  std::vector<GeneratorLabel> out;
  for (const auto& l : basis) {
    if (l.kind == kind) out.push_back(l);
  }
  return out;
}

StructureConstants structure_constants(const FundamentalRep& rep) {
  const auto datum = build_root_datum(rep.spec);
  StructureConstants sc;
  for (const auto& [label, mat] : rep.matrices) sc.basis.push_back(label);
  const auto nb = sc.basis.size();
  const auto dim = datum.dim();

  for (const auto& label : sc.basis) {
    IntWeight w(dim, 0);
    const auto k = static_cast<std::size_t>(label.index - 1);
    switch (label.kind) {
      case GenKind::e:
        w = datum.even_positive[k].coords;
        break;
      case GenKind::f:
        for (std::size_t c = 0; c < dim; ++c) w[c] = -datum.even_positive[k].coords[c];
        break;
      case GenKind::u:
        w = datum.odd_positive[k].coords;
        break;
      case GenKind::v:
        for (std::size_t c = 0; c < dim; ++c) w[c] = -datum.odd_positive[k].coords[c];
        break;
      default:
        break;
    }
    sc.roots.push_back(std::move(w));
  }

  // Columns of `basis_cols` are the flattened basis matrices; each bracket is one right-hand side.
  DenseMatrix basis_cols(dim * dim, nb);
  std::vector<const PolyMatrix*> mats;
  for (std::size_t a = 0; a < nb; ++a) {
    mats.push_back(&rep.matrices.at(sc.basis[a]));
    const auto dense = DenseMatrix::from_poly(*mats.back());
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) basis_cols(r * dim + c, a) = dense(r, c);
    }
  }
  DenseMatrix rhs(dim * dim, nb * nb);
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      const auto br = DenseMatrix::from_poly(
          super_bracket(*mats[a], sc.basis[a].odd(), *mats[b], sc.basis[b].odd()));
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) rhs(r * dim + c, a * nb + b) = br(r, c);
      }
    }
  }
  const auto coeffs = solve(basis_cols, rhs);
  if (!coeffs || !((basis_cols * *coeffs) - rhs).is_zero()) {
    throw StructuralError("a superbracket of fundamental matrices is not in the span of the basis");
  }
  sc.table.assign(nb, std::vector<SparseVector>(nb));
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = 0; c < nb; ++c) {
        const auto& x = (*coeffs)(c, a * nb + b);
        if (x != 0) sc.table[a][b].emplace(c, x);
      }
    }
  }
  sc.k = sc.coefficient(u_(1), v_(1), kY);
  if (sc.k == 0) throw StructuralError("k vanishes: {u_1, v_1} has no hypercharge component");
  return sc;
}

std::vector<ParamPoly> highest_weight_coords(const RootDatum& datum,
                                             const std::vector<int>& labels,
                                             const ParamNames& params) {
  if (labels.size() != static_cast<std::size_t>(datum.rank)) {
    throw PreconditionError("expected " + std::to_string(datum.rank) + " even Dynkin labels, got " +
                            std::to_string(labels.size()));
  }
  for (int a : labels) {
    if (a < 0) throw PreconditionError("even Dynkin labels must be non-negative (non-dominant label " + std::to_string(a) + ")");
  }
  const auto m = static_cast<std::size_t>(datum.spec.m);
  const auto dim = datum.dim();
  std::vector<ParamPoly> w(dim, ParamPoly(params));
  // lambda_m = 0, lambda_i = lambda_{i+1} + a_i; mu_1 = b - lambda_m; mu_{j+1} = mu_j - a.
  for (std::size_t i = m - 1; i-- > 0;) w[i] = w[i + 1] + ParamPoly(params, labels[i]);
  w[m] = ParamPoly::variable(params, "b");
  for (std::size_t j = m + 1; j < dim; ++j) w[j] = w[j - 1] - ParamPoly(params, labels[j - 2]);
  return w;
}

ParamPoly shifted_pairing(const RootDatum& datum, const std::vector<ParamPoly>& weight, int idx) {
  if (idx < 1 || idx > datum.P) throw PreconditionError("odd root index out of range");
  const auto& beta = datum.odd_positive[static_cast<std::size_t>(idx - 1)].coords;
  const auto& params = weight.front().params();
  ParamPoly acc(params);
  for (std::size_t c = 0; c < datum.dim(); ++c) {
    if (beta[c] == 0) continue;
    const Rational sign = datum.is_even_index(c) ? 1 : -1;
    acc += (weight[c] + ParamPoly(params, datum.rho[c])) * (sign * beta[c]);
  }
  return acc;
}

std::vector<ParamPoly> typicality_factors(const RootDatum& datum, const std::vector<int>& labels,
                                          const ParamNames& params) {
  const auto w = highest_weight_coords(datum, labels, params);
  std::vector<ParamPoly> out;
  for (int idx = 1; idx <= datum.P; ++idx) out.push_back(shifted_pairing(datum, w, idx));
  return out;
}

std::shared_ptr<const Algebra> make_algebra(const SuperAlgebraSpec& spec) {
  auto alg = std::make_shared<Algebra>();
  alg->spec = spec;
  alg->datum = build_root_datum(spec);
  alg->fundamental = build_fundamental_rep(spec);
  alg->sc = structure_constants(alg->fundamental);
  alg->params = spec.flavor == Flavor::gl ? make_params({"b", "c"}) : make_params({"b"});
  return alg;
}

}  // namespace kacrep
