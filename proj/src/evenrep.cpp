#include <kacrep/errors.hpp>
#include <kacrep/evenrep.hpp>
#include <kacrep/linsolve.hpp>

#include <algorithm>

namespace kacrep {

std::vector<GeneratorLabel> even_labels(const StructureConstants& sc) {
  std::vector<GeneratorLabel> out;
  for (const auto& l : sc.basis) {
    if (!l.odd()) out.push_back(l);
  }
  return out;
}

ParamPoly labels_to_hypercharge(const Algebra& alg, const std::vector<int>& labels) {
  if (labels.size() != static_cast<std::size_t>(alg.datum.rank)) {
    throw PreconditionError("expected " + std::to_string(alg.datum.rank) +
                            " even Dynkin labels, got " + std::to_string(labels.size()));
  }
  const auto& sc = alg.sc;
  if (sc.k == 0) throw PreconditionError("k = 0: hypercharge cannot be solved from b");
  auto num = ParamPoly::variable(alg.params, "b");
  for (int i = 1; i <= alg.datum.rank; ++i) {
    num -= ParamPoly(alg.params, sc.coefficient(u_(1), v_(1), h_(i)) * labels[static_cast<std::size_t>(i - 1)]);
  }
  if (sc.contains(kZ0)) {
    num -= ParamPoly::variable(alg.params, "c") * sc.coefficient(u_(1), v_(1), kZ0);
  }
  return num * Rational(1 / sc.k);
}

mpz_class weyl_dimension(const RootDatum& datum, const std::vector<int>& labels) {
  if (labels.size() != static_cast<std::size_t>(datum.rank)) {
    throw PreconditionError("expected " + std::to_string(datum.rank) + " even Dynkin labels");
  }
  Rational num = 1;
  Rational den = 1;
  for (const auto& root : datum.even_positive) {
    long shifted = 0;
    long plain = 0;
    for (std::size_t l = 0; l < root.simple_coords.size(); ++l) {
      if (labels[l] < 0) throw PreconditionError("non-dominant label in Weyl dimension");
      shifted += root.simple_coords[l] * (labels[l] + 1);
      plain += root.simple_coords[l];
    }
    num *= shifted;
    den *= plain;
  }
  Rational q = num / den;
  q.canonicalize();
  if (q.get_den() != 1) throw StructuralError("Weyl dimension is not an integer");
  return q.get_num();
}

namespace {

// Height of x (sum zero) in simple roots e_p - e_{p+1}: sum of partial sums.
int block_height(const std::vector<int>& x) {
  int acc = 0;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    partial += x[i];
    acc += partial;
  }
  return acc;
}

}  // namespace

int verma_depth_bound(const RootDatum& datum, const std::vector<int>& labels) {
  const auto m = static_cast<std::size_t>(datum.spec.m);
  const auto n = static_cast<std::size_t>(datum.spec.n);
  std::vector<int> lam(m, 0);
  for (std::size_t i = m - 1; i-- > 0;) lam[i] = lam[i + 1] + labels[i];
  std::vector<int> mu(n, 0);
  for (std::size_t j = 1; j < n; ++j) mu[j] = mu[j - 1] - labels[m - 1 + j - 1];
  auto diff = [](const std::vector<int>& w) {
    std::vector<int> x(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) x[i] = w[i] - w[w.size() - 1 - i];
    return x;
  };
  return block_height(diff(lam)) + block_height(diff(mu));
}

namespace {

using Word = std::vector<int>;  // 1-based simple-root indices
using Key = std::vector<int>;   // multiplicity of each simple root

class ShapovalovForm {
 public:
  ShapovalovForm(const std::vector<std::vector<int>>& cartan, const std::vector<int>& labels)
      : cartan_(cartan), labels_(labels) {}

  // Coefficient of the top vector in e_{E.back()} ... e_{E[0]} f_F v.
  Rational value(const Word& e, const Word& f) {
    if (e.size() != f.size()) return 0;
    if (e.empty()) return 1;
    auto se = e;
    auto sf = f;
    std::sort(se.begin(), se.end());
    std::sort(sf.begin(), sf.end());
    if (se != sf) return 0;
    const auto key = std::make_pair(e, f);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int i = e.front();
    const Word rest(e.begin() + 1, e.end());
    Rational acc = 0;
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (f[p] != i) continue;
      long eig = labels_[static_cast<std::size_t>(i - 1)];
      for (std::size_t q = p + 1; q < f.size(); ++q) {
        eig -= cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(f[q] - 1)];
      }
      if (eig == 0) continue;
      Word shorter = f;
      shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p));
      acc += value(rest, shorter) * eig;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  const std::vector<std::vector<int>>& cartan_;
  const std::vector<int>& labels_;
  std::map<std::pair<Word, Word>, Rational> memo_;
};

struct WeightSpace {
  std::vector<Word> words;         // basis words
  std::vector<std::size_t> index;  // global basis index of each word
  DenseMatrix gram_inverse;
};

Word prepend(int i, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(i);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

EvenModule build_even_irrep(std::shared_ptr<const Algebra> alg, const std::vector<int>& labels) {
  const auto& datum = alg->datum;
  const auto r = static_cast<std::size_t>(datum.rank);
  if (labels.size() != r) {
    throw PreconditionError("expected " + std::to_string(r) + " even Dynkin labels, got " +
                            std::to_string(labels.size()));
  }
  for (int a : labels) {
    if (a < 0) {
      throw PreconditionError("even Dynkin labels must be non-negative integers (non-dominant label " +
                              std::to_string(a) + ")");
    }
  }
  const int bound = verma_depth_bound(datum, labels);
  ShapovalovForm form(datum.cartan, labels);

  std::map<Key, WeightSpace> spaces;
  std::vector<Key> keys_of;  // per global index
  std::vector<Word> words_of;
  auto add_space = [&](const Key& key, std::vector<Word> candidates) {
    const auto nc = candidates.size();
    DenseMatrix gram(nc, nc);
    for (std::size_t x = 0; x < nc; ++x) {
      for (std::size_t y = x; y < nc; ++y) {
        gram(x, y) = form.value(candidates[x], candidates[y]);
        gram(y, x) = gram(x, y);
      }
    }
    const auto red = row_reduce(gram);
    if (red.rank == 0) return;
    WeightSpace ws;
    for (auto c : red.pivot_columns) {
      ws.words.push_back(candidates[c]);
      ws.index.push_back(words_of.size());
      words_of.push_back(candidates[c]);
      keys_of.push_back(key);
    }
    DenseMatrix gb(ws.words.size(), ws.words.size());
    for (std::size_t x = 0; x < ws.words.size(); ++x) {
      for (std::size_t y = 0; y < ws.words.size(); ++y) gb(x, y) = form.value(ws.words[x], ws.words[y]);
    }
    auto inv = inverse(gb);
    if (!inv) throw StructuralError("Gram matrix of a weight-space basis is singular");
    ws.gram_inverse = std::move(*inv);
    spaces.emplace(key, std::move(ws));
  };

  add_space(Key(r, 0), {Word{}});
  std::vector<Key> frontier{Key(r, 0)};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::map<Key, std::vector<Word>> candidates;
    for (const auto& key : frontier) {
      const auto& ws = spaces.at(key);
      for (std::size_t i = 1; i <= r; ++i) {
        auto next = key;
        next[i - 1] += 1;
        auto& list = candidates[next];
        for (const auto& w : ws.words) list.push_back(prepend(static_cast<int>(i), w));
      }
    }
    frontier.clear();
    for (auto& [key, list] : candidates) {
      add_space(key, std::move(list));
      if (spaces.count(key)) frontier.push_back(key);
    }
    if (!frontier.empty() && depth > bound) {
      throw StructuralError("weight space survives beyond the depth bound " + std::to_string(bound));
    }
  }

  const auto dim = words_of.size();
  const auto expected = weyl_dimension(datum, labels);
  if (mpz_class(static_cast<unsigned long>(dim)) != expected) {
    throw StructuralError("even irrep has dimension " + std::to_string(dim) +
                          " but the Weyl formula gives " + expected.get_str());
  }

  EvenModule mod;
  mod.algebra = alg;
  mod.labels = labels;
  mod.y0 = labels_to_hypercharge(*alg, labels);
  mod.c = alg->spec.flavor == Flavor::gl ? ParamPoly::variable(alg->params, "c")
                                          : ParamPoly(alg->params);
  mod.words = words_of;
  auto& rep = mod.rep;
  rep.kind = "even";
  rep.params = alg->params;
  rep.dim = dim;
  for (std::size_t g = 0; g < dim; ++g) {
    BasisVectorInfo info;
    info.even_index = g;
    info.weight.assign(datum.dim(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < datum.dim(); ++c) info.weight[c] -= keys_of[g][i] * datum.simple_roots[i][c];
    }
    rep.basis.push_back(std::move(info));
  }

  const auto& params = alg->params;
  auto constant = [&](const Rational& q) { return ParamPoly(params, q); };

  for (std::size_t i = 1; i <= r; ++i) {
    PolyMatrix h(dim, dim, params);
    PolyMatrix e(dim, dim, params);
    PolyMatrix f(dim, dim, params);
    for (std::size_t g = 0; g < dim; ++g) {
      long eig = labels[i - 1];
      for (int j : words_of[g]) eig -= datum.cartan[i - 1][static_cast<std::size_t>(j - 1)];
      h.set(g, g, constant(eig));

      auto up = keys_of[g];
      auto down = keys_of[g];
      down[i - 1] += 1;
      if (const auto it = spaces.find(down); it != spaces.end()) {
        const auto& ws = it->second;
        const auto target = prepend(static_cast<int>(i), words_of[g]);
        std::vector<Rational> rhs(ws.words.size());
        for (std::size_t x = 0; x < ws.words.size(); ++x) rhs[x] = form.value(ws.words[x], target);
        for (std::size_t x = 0; x < ws.words.size(); ++x) {
          Rational acc = 0;
          for (std::size_t y = 0; y < ws.words.size(); ++y) acc += ws.gram_inverse(x, y) * rhs[y];
          f.set(ws.index[x], g, constant(acc));
        }
      }
      if (up[i - 1] > 0) {
        up[i - 1] -= 1;
        if (const auto it = spaces.find(up); it != spaces.end()) {
          const auto& ws = it->second;
          std::vector<Rational> rhs(ws.words.size());
          for (std::size_t x = 0; x < ws.words.size(); ++x) {
            rhs[x] = form.value(prepend(static_cast<int>(i), ws.words[x]), words_of[g]);
          }
          for (std::size_t x = 0; x < ws.words.size(); ++x) {
            Rational acc = 0;
            for (std::size_t y = 0; y < ws.words.size(); ++y) acc += ws.gram_inverse(x, y) * rhs[y];
            e.set(ws.index[x], g, constant(acc));
          }
        }
      }
    }
    rep.matrices.emplace(h_(static_cast<int>(i)), std::move(h));
    rep.matrices.emplace(e_(static_cast<int>(i)), std::move(e));
    rep.matrices.emplace(f_(static_cast<int>(i)), std::move(f));
  }

  // Non-simple root vectors: E_ab = [E_{a,a+1}, E_{a+1,b}], E_ba = [E_{b,a+1}, E_{a+1,a}].
  std::map<std::pair<std::size_t, std::size_t>, int> label_of;
  for (std::size_t k = 0; k < datum.even_positive.size(); ++k) {
    label_of[{datum.even_positive[k].row, datum.even_positive[k].col}] = static_cast<int>(k + 1);
  }
  for (std::size_t k = r; k < datum.even_positive.size(); ++k) {
    const auto& root = datum.even_positive[k];
    const int first = label_of.at({root.row, root.row + 1});
    const int rest = label_of.at({root.row + 1, root.col});
    rep.matrices.emplace(e_(static_cast<int>(k + 1)),
                         super_bracket(rep.matrices.at(e_(first)), false, rep.matrices.at(e_(rest)), false));
    rep.matrices.emplace(f_(static_cast<int>(k + 1)),
                         super_bracket(rep.matrices.at(f_(rest)), false, rep.matrices.at(f_(first)), false));
  }

  PolyMatrix y(dim, dim, params);
  for (std::size_t g = 0; g < dim; ++g) y.set(g, g, mod.y0);
  rep.matrices.emplace(kY, std::move(y));
  if (alg->spec.flavor == Flavor::gl) {
    PolyMatrix z(dim, dim, params);
    for (std::size_t g = 0; g < dim; ++g) z.set(g, g, mod.c);
    rep.matrices.emplace(kZ0, std::move(z));
  }
  return mod;
}

}  // namespace kacrep
