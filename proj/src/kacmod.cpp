#include <kacrep/errors.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/linsolve.hpp>

#include <algorithm>
#include <numeric>

namespace kacrep {

InducingModule inducing_module(const EvenModule& L) {
  InducingModule M;
  M.params = L.rep.params;
  M.dim = L.rep.dim;
  for (const auto& info : L.rep.basis) M.weights.push_back(info.weight);
  M.action = L.rep.matrices;
  return M;
}

OddSplit split_odd(const StructureConstants& sc) {
  OddSplit out;
  for (std::size_t a = 0; a < sc.size(); ++a) {
    if (sc.basis[a].kind == GenKind::v) out.lowering.push_back(a);
    if (sc.basis[a].kind == GenKind::u) out.raising.push_back(a);
  }
  if (out.lowering.size() != out.raising.size()) {
    throw StructuralError("odd part is not split into matching u and v generators");
  }
  for (std::size_t j = 0; j < out.lowering.size(); ++j) {
    if (sc.basis[out.lowering[j]].index != static_cast<int>(j + 1) ||
        sc.basis[out.raising[j]].index != static_cast<int>(j + 1)) {
      throw StructuralError("odd generators are not numbered 1..P");
    }
  }
  return out;
}

namespace {

using Key = std::pair<std::vector<int>, std::size_t>;

void accumulate(KacVector& out, const Key& key, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) out.erase(it);
}

// Sorts a list of distinct v positions; returns the permutation sign.
int sort_with_sign(std::vector<int>& list) {
  int sign = 1;
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = i; j > 0 && list[j - 1] > list[j]; --j) {
      std::swap(list[j - 1], list[j]);
      sign = -sign;
    }
  }
  return sign;
}

class Inducer {
 public:
  Inducer(const StructureConstants& sc, const InducingModule& M) : sc_(sc), M_(M), odd_(split_odd(sc)) {
    for (std::size_t j = 0; j < odd_.lowering.size(); ++j) position_[odd_.lowering[j]] = static_cast<int>(j + 1);
    for (const auto& [label, mat] : M.action) {
      if (mat.rows() != M.dim || mat.cols() != M.dim) {
        throw PreconditionError("inducing matrix of " + label.name() + " has the wrong size");
      }
      auto& cols = columns_[label];
      cols.resize(M.dim);
      for (std::size_t r = 0; r < M.dim; ++r) {
        for (const auto& [c, p] : mat.row(r)) cols[c].emplace_back(r, p);
      }
    }
    for (std::size_t a = 0; a < sc.size(); ++a) {
      if (!sc.odd(a) && !columns_.count(sc.basis[a])) {
        throw PreconditionError("inducing module has no matrix for even generator " + sc.basis[a].name());
      }
    }
  }

  const OddSplit& odd() const { return odd_; }

  KacVector apply_v(int j, const KacVector& x) const {
    KacVector out;
    for (const auto& [key, coeff] : x) {
      const auto& s = key.first;
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      const auto smaller = std::lower_bound(s.begin(), s.end(), j) - s.begin();
      auto t = s;
      t.insert(t.begin() + smaller, j);
      accumulate(out, {t, key.second}, smaller % 2 == 0 ? coeff : -coeff);
    }
    return out;
  }

  KacVector apply_even(std::size_t x, const KacVector& vec) const {
    KacVector out;
    const auto& cols = columns_.at(sc_.basis[x]);
    for (const auto& [key, coeff] : vec) {
      const auto& [s, w] = key;
      for (std::size_t p = 0; p < s.size(); ++p) {
        for (const auto& [c, f] : sc_.bracket(x, odd_.lowering[static_cast<std::size_t>(s[p] - 1)])) {
          const auto it = position_.find(c);
          if (it == position_.end()) {
            throw StructuralError("[" + sc_.basis[x].name() + ", v] leaves the lowering odd part");
          }
          auto t = s;
          t[p] = it->second;
          auto sorted = t;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          const int sign = sort_with_sign(t);
          accumulate(out, {t, w}, coeff * (sign > 0 ? f : Rational(-f)));
        }
      }
      for (const auto& [r, p] : cols[w]) accumulate(out, {s, r}, coeff * p);
    }
    return out;
  }

  KacVector apply_u(int j, const std::vector<int>& s, std::size_t w) const {
    KacVector out;
    const auto u = odd_.raising[static_cast<std::size_t>(j - 1)];
    for (std::size_t p = 0; p < s.size(); ++p) {
      const auto& anti = sc_.bracket(u, odd_.lowering[static_cast<std::size_t>(s[p] - 1)]);
      if (anti.empty()) continue;
      KacVector tail;
      tail.emplace(Key{std::vector<int>(s.begin() + static_cast<std::ptrdiff_t>(p) + 1, s.end()), w},
                   ParamPoly(M_.params, p % 2 == 0 ? 1 : -1));
      KacVector acted;
      for (const auto& [c, f] : anti) {
        if (sc_.odd(c)) throw StructuralError("{u, v} has an odd component");
        for (const auto& [key, coeff] : apply_even(c, tail)) accumulate(acted, key, coeff * f);
      }
      for (std::size_t q = p; q-- > 0;) acted = apply_v(s[q], acted);
      for (const auto& [key, coeff] : acted) accumulate(out, key, coeff);
    }
    return out;
  }

 private:
  const StructureConstants& sc_;
  const InducingModule& M_;
  OddSplit odd_;
  std::map<std::size_t, int> position_;
  std::map<GeneratorLabel, std::vector<std::vector<std::pair<std::size_t, ParamPoly>>>> columns_;
};

std::vector<std::vector<int>> subsets_of_size(int P, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  if (k > P) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == P - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int l = i + 1; l < k; ++l) cur[static_cast<std::size_t>(l)] = cur[static_cast<std::size_t>(l - 1)] + 1;
  }
  return out;
}

}  // namespace

KacVector normal_order_odd(const StructureConstants& sc, const InducingModule& M, int u_index,
                           const std::vector<int>& subset, std::size_t even_index) {
  Inducer ind(sc, M);
  if (u_index < 1 || static_cast<std::size_t>(u_index) > ind.odd().raising.size()) {
    throw PreconditionError("odd raising index out of range");
  }
  if (even_index >= M.dim) throw PreconditionError("even index out of range");
  return ind.apply_u(u_index, subset, even_index);
}

Representation induce(const StructureConstants& sc, const InducingModule& M, std::string kind) {
  Inducer ind(sc, M);
  const int P = static_cast<int>(ind.odd().lowering.size());
  Representation rep;
  rep.kind = std::move(kind);
  rep.params = M.params;
  std::map<Key, std::size_t> index;
  for (int layer = 0; layer <= P; ++layer) {
    for (const auto& s : subsets_of_size(P, layer)) {
      for (std::size_t w = 0; w < M.dim; ++w) {
        BasisVectorInfo info;
        info.odd_subset = s;
        info.even_index = w;
        info.weight = M.weights[w];
        for (int j : s) info.weight = add(info.weight, sc.roots[ind.odd().lowering[static_cast<std::size_t>(j - 1)]]);
        index.emplace(Key{s, w}, rep.basis.size());
        rep.basis.push_back(std::move(info));
      }
    }
  }
  rep.dim = rep.basis.size();

  for (std::size_t a = 0; a < sc.size(); ++a) {
    PolyMatrix mat(rep.dim, rep.dim, M.params);
    for (std::size_t g = 0; g < rep.dim; ++g) {
      const auto& info = rep.basis[g];
      KacVector result;
      if (sc.basis[a].kind == GenKind::v) {
        KacVector single;
        single.emplace(Key{info.odd_subset, info.even_index}, ParamPoly(M.params, 1));
        result = ind.apply_v(sc.basis[a].index, single);
      } else if (sc.basis[a].kind == GenKind::u) {
        result = ind.apply_u(sc.basis[a].index, info.odd_subset, info.even_index);
      } else {
        KacVector single;
        single.emplace(Key{info.odd_subset, info.even_index}, ParamPoly(M.params, 1));
        result = ind.apply_even(a, single);
      }
      for (const auto& [key, coeff] : result) mat.set(index.at(key), g, coeff);
    }
    rep.matrices.emplace(sc.basis[a], std::move(mat));
  }
  return rep;
}

std::size_t KacModule::index_of(const std::vector<int>& subset, std::size_t even_index) const {
  for (std::size_t g = 0; g < rep.basis.size(); ++g) {
    if (rep.basis[g].odd_subset == subset && rep.basis[g].even_index == even_index) return g;
  }
  throw PreconditionError("no basis vector with that odd subset and even index");
}

KacModule build_kac_module(std::shared_ptr<const Algebra> alg, const std::vector<int>& labels) {
  KacModule K;
  K.algebra = alg;
  K.even = build_even_irrep(alg, labels);
  K.rep = induce(alg->sc, inducing_module(K.even), "kac");
  return K;
}

TypicalityResult kac_typicality(const KacModule& K) {
  const auto& alg = *K.algebra;
  const auto& params = K.rep.params;
  std::map<std::size_t, ParamPoly> x;
  x.emplace(0, ParamPoly(params, 1));
  for (int j = 1; j <= alg.datum.P; ++j) x = K.rep.matrix(v_(j)).apply(x);
  for (int j = 1; j <= alg.datum.P; ++j) x = K.rep.matrix(u_(j)).apply(x);

  TypicalityResult t;
  t.s = x.count(0) ? x.at(0) : ParamPoly(params);
  t.factors = typicality_factors(alg.datum, K.labels(), params);
  t.factor_product = ParamPoly(params, 1);
  for (const auto& f : t.factors) t.factor_product *= f;
  if (t.s.is_zero()) throw StructuralError("typicality scalar s(b) vanishes identically");
  t.s_roots = rational_roots(t.s, "b");
  t.factor_roots = rational_roots(t.factor_product, "b");
  t.roots_match = t.s_roots == t.factor_roots;
  const auto deg = t.factor_product.degree("b");
  if (t.s.degree("b") == deg) {
    const auto lead_s = t.s.coefficient("b", deg);
    const auto lead_p = t.factor_product.coefficient("b", deg);
    if (lead_s.is_constant() && lead_p.is_constant()) {
      const Rational q = lead_s.constant_value() / lead_p.constant_value();
      if (t.s == t.factor_product * q) t.constant = q;
    }
  }
  return t;
}

TypicalityClass classify(const TypicalityResult& t, const Rational& b) {
  TypicalityClass out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (t.factors[i].substitute({{"b", b}}).is_zero()) {
      out.typical = false;
      out.atypical_types.push_back(static_cast<int>(i + 1));
    }
  }
  return out;
}

Representation substitute(const Representation& rep, const Bindings& bindings) {
  Representation out = rep;
  for (auto& [label, m] : out.matrices) m = m.substitute(bindings);
  return out;
}

SingularVectorReport singular_vectors(const KacModule& K, const Rational& b_value, RaisingSet mode) {
  Bindings bind{{"b", b_value}};
  if (K.algebra->spec.flavor == Flavor::gl) bind.emplace("c", 0);
  std::vector<DenseMatrix> raising;
  for (const auto& [label, m] : K.rep.matrices) {
    if (label.kind == GenKind::e || (mode == RaisingSet::even_and_odd && label.kind == GenKind::u)) {
      raising.push_back(DenseMatrix::from_poly(m.substitute(bind)));
    }
  }
  SingularVectorReport report;
  report.b = b_value;
  report.mode = mode;
  for (const auto& [weight, idx] : K.rep.weight_spaces()) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& X : raising) {
      for (std::size_t r = 0; r < X.rows(); ++r) {
        std::vector<Rational> row(idx.size());
        bool any = false;
        for (std::size_t k = 0; k < idx.size(); ++k) {
          row[k] = X(r, idx[k]);
          any = any || row[k] != 0;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    DenseMatrix stacked(rows.size(), idx.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t k = 0; k < idx.size(); ++k) stacked(r, k) = rows[r][k];
    }
    for (const auto& null : row_reduce(stacked).nullspace) {
      SingularVector sv;
      sv.weight = weight;
      sv.coefficients.assign(K.rep.dim, Rational(0));
      std::vector<int> layers;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        sv.coefficients[idx[k]] = null[k];
        if (null[k] != 0) layers.push_back(K.rep.basis[idx[k]].layer());
      }
      std::sort(layers.begin(), layers.end());
      layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
      sv.layers = std::move(layers);
      report.vectors.push_back(std::move(sv));
    }
  }
  return report;
}

Character character(const Representation& rep) {
  Character ch;
  for (const auto& info : rep.basis) ++ch[info.weight];
  return ch;
}

Character expected_character(const KacModule& K) {
  const auto& datum = K.algebra->datum;
  Character even;
  for (const auto& info : K.even.rep.basis) ++even[info.weight];
  Character out;
  const unsigned P = static_cast<unsigned>(datum.P);
  for (unsigned mask = 0; mask < (1u << P); ++mask) {
    IntWeight shift(datum.dim(), 0);
    for (unsigned i = 0; i < P; ++i) {
      if (mask & (1u << i)) {
        for (std::size_t c = 0; c < datum.dim(); ++c) shift[c] -= datum.odd_positive[i].coords[c];
      }
    }
    for (const auto& [w, mult] : even) out[add(w, shift)] += mult;
  }
  return out;
}

VerificationReport check_degree_profile(const Representation& rep) {
  VerificationReport report;
  for (const auto& [label, m] : rep.matrices) {
    if (label.kind == GenKind::y || label.kind == GenKind::z) continue;
    const unsigned cap = label.kind == GenKind::u ? 1 : 0;
    const unsigned deg = m.degree("b");
    if (deg > cap) {
      report.add("degree_b(" + label.name() + ") <= " + std::to_string(cap), false, label.name(),
                 "degree " + std::to_string(deg));
    }
  }
  if (report.checks.empty()) report.add("degree_profile", true);
  return report;
}

}  // namespace kacrep
